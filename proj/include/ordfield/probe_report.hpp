#pragma once

#include <string>
#include <vector>

namespace ordfield {

enum class Verdict { Witness, CounterexampleShown, Inconclusive };

std::string to_string(Verdict v);

// Outcome of one order/completeness probe. Witness verdicts carry the
// value(s) satisfying the probed predicate, re-checked before the report
// is built; CounterexampleShown carries the refuting value.
struct ProbeReport {
    std::string name;
    Verdict verdict = Verdict::Inconclusive;
    std::vector<std::string> witnesses;
    std::vector<std::string> trace;

    // Header line "probe: <name> / verdict: <v> / witness: <expr>",
    // then one line per trace entry.
    std::string to_text() const;
    std::string to_json() const;  // stable key order, indent 2
};

}  // namespace ordfield
