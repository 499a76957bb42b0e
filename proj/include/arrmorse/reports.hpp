#pragma once

#include <string>

#include "arrmorse/followup.hpp"

namespace arrmorse {

// JSON report emitters shared by the CLI and the python bindings. Every
// report echoes the inputs that determined it (seed, limits) so runs can be
// reproduced bit for bit.

std::string faces_report(const Arrangement& arr);
std::string lattice_report(const Arrangement& arr);
std::string flag_json_report(const Arrangement& arr, const Flag& fl, uint64_t seed);
std::string sweep_report(const Flag& fl, uint64_t seed);
std::string polar_report(const Flag& fl, const Orderings& ords, uint64_t seed,
                         const std::string& format);  // "json" or "tsv"
std::string morse_report(const Flag& fl, const Orderings& ords, uint64_t seed, bool* pass);
std::string followup_report(const Arrangement& arr, const Flag* fl, uint64_t seed,
                            int random_budget, bool* result);
std::string supersolvable_report(const Arrangement& arr, uint64_t seed, bool* pass);

}  // namespace arrmorse
