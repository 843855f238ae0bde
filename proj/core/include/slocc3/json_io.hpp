#pragma once

#include <string>

#include "slocc3/classify.hpp"
#include "slocc3/multiparty.hpp"
#include "slocc3/states.hpp"
#include "slocc3/verify.hpp"

namespace slocc3 {

// State file format:
//   {"dims": [2, 2, 2], "amplitudes": [[re, im], ...]}
// with the flat mixed-radix ordering of PureState (party A most
// significant) and numbers written with 17 significant digits.
std::string state_json(const PureState& psi);
PureState parse_state_json(const std::string& text);

void save_state_file(const PureState& psi, const std::string& path);
PureState load_state_file(const std::string& path);  // ParseError on bad input

// Report serializers. Output is deterministic: keys are emitted sorted and
// doubles in shortest round-trip form.
std::string measure_report_json(const MeasureReport& report, int indent = 2);
std::string classification_report_json(const ClassificationReport& report, int indent = 2);
std::string residual_report_json(const ResidualReport& report, int indent = 2);
std::string dim_count_json(const DimCount& count, int indent = 2);
std::string verify_report_json(const VerifyReport& report, int indent = 2);

}  // namespace slocc3
