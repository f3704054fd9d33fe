#pragma once

#include <ostream>
#include <string>

#include "radsolve/harness.hpp"

// Report file: JSON Lines. One "case" object per CaseRecord (keys in the
// order of the struct), a "census" object after each quintic case that has
// one, and a single "aggregate" object last. Every number is printed with
// 17 significant digits; non-finite numbers are the strings "inf", "-inf",
// "nan".

namespace radsolve {

std::string format_number(double v);
std::string format_complex(Complex z);

std::string case_record_json(const CaseRecord& rec);
std::string census_json(const CaseRecord& rec, const CandidateCensus& census);
std::string aggregate_json(const EnsembleReport& report);

void write_report(std::ostream& os, const EnsembleRun& run);

}  // namespace radsolve
