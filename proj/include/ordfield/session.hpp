#pragma once

#include <string>

namespace ordfield {

enum class FieldTag { Q, Laurent, LeviCivita, RatfuncInf, RatfuncZero };
enum class OutputFormat { Text, Json };

struct SessionConfig {
    FieldTag field = FieldTag::Laurent;
    long trunc = 16;  // expansion depth for inverse/sqrt/series division
    OutputFormat format = OutputFormat::Text;
    long scan_bound = 1000000;  // cap for scan-based probes
};

// Accepts q, laurent, lc, ratfunc-inf, ratfunc-zero.
FieldTag parse_field_tag(const std::string& s);
std::string to_string(FieldTag f);

}  // namespace ordfield
