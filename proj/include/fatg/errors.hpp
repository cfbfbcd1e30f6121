#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fatg {

// Root of all toolkit errors.  The CLI maps anything derived from Error to
// exit code 2 (data problem); command-line misuse is reported separately.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A triplet segment does not have exactly three `;`-separated fields.
class MalformedTriplet : public Error {
 public:
  using Error::Error;
};

// A triplet field is empty (or a bare placeholder) after normalization.
class EmptyField : public Error {
 public:
  using Error::Error;
};

// A corpus line could not be parsed; carries the 1-based line number.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& detail)
      : Error("line " + std::to_string(line) + ": " + detail), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_ = 0;
};

// A required record key is absent or empty.
class MissingField : public Error {
 public:
  using Error::Error;
};

// Two corpus records share an id.
class DuplicateId : public Error {
 public:
  using Error::Error;
};

// A hypothesis id has no counterpart in the reference corpus.
class UnmatchedId : public Error {
 public:
  using Error::Error;
};

// An operation that needs at least one record received none.
class EmptyCorpus : public Error {
 public:
  using Error::Error;
};

// Generation or scoring was requested from a model with no counts.
class UntrainedModel : public Error {
 public:
  using Error::Error;
};

// A file could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace fatg
