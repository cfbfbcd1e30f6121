#pragma once

// Regression fixtures: three published failure-analysis cases, each with the
// expert (human) analysis and the sequences that several text-generation
// models produced for the same failure description.  The expected scores
// hard-coded in the tests come from the published per-pair measurements.

namespace fixtures {

// Case A: administrative + X-ray + electrical-verification analysis,
// 4 triplets (12 field tokens).
inline constexpr const char* kCaseAHuman =
    "Others; administrative activity; OM113 - LEICA M165C | "
    "Non destructive Inspection; X-ray; PK103 - PHOENIX X-RAY NANOMEX | "
    "Electrical Failure Verification; Electrical parametrical test; ZZ003 - "
    "CRI7 | "
    "Electrical Failure Verification; Electrical parametrical test; ZZ002 - "
    "CRI6";

/// GPT-2 and GPT-2 Large produced the same 3-triplet sequence: the first two
// expert triplets plus a bench-test step instead of the CRI pair.
inline constexpr const char* kCaseAGpt2 =
    "Others; administrative activity; OM113 - LEICA M165C | "
    "Non destructive Inspection; X-ray; PK103 - PHOENIX X-RAY NANOMEX | "
    "Electrical Failure Verification; Electrical parametrical test; FV001 - "
    "BENCH TEST";

// GPT-2 Medium reproduced the expert sequence exactly.
inline constexpr const char* kCaseAGpt2Medium = kCaseAHuman;

// GPT-3 produced 11 triplets (33 field tokens), mostly unrelated.
inline constexpr const char* kCaseAGpt3 =
    "sample preparation package; decap; tools | "
    "sample preparation; package decap; sp001 - wet + microscopio | "
    "physical analysis; sem; em202 - nvision 40 | "
    "others; administrative activity; om103 - leica dm lmp | "
    "others; administrative activity; om113 - leica m165c | "
    "non destructive inspection; ir microscopy; om111 - olympus mx51 - f | "
    "electrical failure verification; electrical parametrical test; zz003 - "
    "cri7 ( m202 | "
    "global fault localisation; emmi; failure rate chain chain analyzer ( "
    "ecn | "
    "global fault localisation; emmi; fi105 - s105 ) oem esafm01 | "
    "electrical failure verification; electrical parametrical test; fv001 - "
    "bench test | "
    "electrical failure verification; continuity test; ftracer - ecn 4";

// BART emitted a malformed first segment ("d abnormal thd" has no field
// separators); lenient text tokenization keeps it as 13 field tokens.
inline constexpr const char* kCaseABart =
    "d abnormal thd | "
    "Physical Analysis; Optical inspection; ANALYSIS EQU EQUIPMENT | "
    "Others; administrative failed; thD403 | "
    "Others; administrative activity; FINAL REPORT GENERATION | "
    "Non destructive Inspection; Optical microscopy; LOW POWER SCOPE";

// Case B: backside-prep + delayering analysis, 5 expert triplets
// (15 field tokens) vs a 6-triplet GPT-2 Medium sequence (18 tokens).
inline constexpr const char* kCaseBHuman =
    "Sample preparation; Wafer / Die Backside prep; SP120 - ALLIED TECHPREP "
    "| "
    "Sample preparation; Die Delayering; SP001 - WET+MICROSCOPIO | "
    "Non destructive Inspection; SEM; EM201 - LEO 1530 | "
    "Global fault localisation; Static Laser Techniques; FI105 - IPHEMOS-MP "
    "| "
    "Electrical Failure Verification; Continuity test; FV001 - BENCH TEST";

inline constexpr const char* kCaseBGpt2Medium =
    "Sample preparation; Package decap; TOOL DECAP | "
    "Physical Analysis; SEM; FIB/SEM | "
    "Physical Analysis; FIB Cross Section; FIB/SEM | "
    "Non destructive Inspection; Optical microscopy; METALGRAPHIC MICROSCOPE "
    "MX61 | "
    "Global fault localisation; Static Laser Techniques; EMMI OBIRCH | "
    "Electrical Failure Verification; Continuity test; CURVE TRACER 1";

// Case C: package-decap analysis, 7 expert triplets (21 field tokens) vs
// the 8-triplet sequence GPT-2 and GPT-2 Large both produced (24 tokens).
inline constexpr const char* kCaseCHuman =
    "Sample preparation; Package decap; MANUAL CHEMICAL DECAP | "
    "Physical Analysis; SEM; PHILIPS SEM XL40 (RSE001) | "
    "Non destructive Inspection; X-ray; B800_FA-XR01 | "
    "Physical Analysis; SEM; HITACHI SEM TM-1000 (RSE002) | "
    "Non destructive Inspection; Optical microscopy; OLYMPUS MICROSCOPE "
    "SZ40 (ROS005) | "
    "Electrical Failure Verification; Continuity test; TEKTRONIX 370A CURVE "
    "TRACER | "
    "Electrical Failure Verification; Continuity test; KEITHLEY PARAMETRIC "
    "ANALYZER";

inline constexpr const char* kCaseCGpt2 =
    "Sample preparation; Package decap; CHEMICALDECAP ACID | "
    "Sample preparation; Package decap; HOTPLATE | "
    "Physical Analysis; Optical inspection; MICROSCOPE MX51 | "
    "Physical Analysis; Optical inspection; METALGRAPHIC MICROSCOPE MX61 | "
    "Non destructive Inspection; Optical microscopy; MICROSCOPE VH8000 | "
    "Non destructive Inspection; X-ray; 3D X-RAY | "
    "Electrical Failure Verification; Continuity test; CURVE TRACER 2 | "
    "Non destructive Inspection; Optical microscopy; MICROSCOPE MX51";

// Case A with the equipment fields of the last two triplets swapped — the
// permutation probe: unigram metrics cannot see it, LESE can.
inline constexpr const char* kCaseAFlipped =
    "Others; administrative activity; OM113 - LEICA M165C | "
    "Non destructive Inspection; X-ray; PK103 - PHOENIX X-RAY NANOMEX | "
    "Electrical Failure Verification; Electrical parametrical test; ZZ002 - "
    "CRI6 | "
    "Electrical Failure Verification; Electrical parametrical test; ZZ003 - "
    "CRI7";

}  // namespace fixtures
