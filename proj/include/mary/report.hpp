#pragma once

#include <string>
#include <vector>

#include "mary/congruence.hpp"
#include "mary/stratification.hpp"

namespace mary {

/* "[a,b,c]" with no padding; the empty vector prints "[]" */
std::string format_mults(const std::vector<Nat>& mults);

/* partition as a multiplicity vector zero-padded to the given width */
std::string format_partition(const MaryPartition& p, std::size_t width);

/* one line: "b=117 simple=9 nonsimple=108 q=36" */
std::string count_line(Nat n, Nat base);

/* Machine-readable stratification report. Keys, in order:
 * n, m, b, simple_count, nonsimple_count, fibers[].b, .digits, .strata[].z,
 * .classes[].tail, .r, .members, .nops_mod_m. Counts that can exceed 64 bits
 * are decimal strings. Byte-deterministic for fixed input.
 */
std::string stratification_json(const Stratification& s);

/* Human-oriented nested report; one fiber heading per block, one line per
 * chain class with members listed by ascending count of ones.
 */
std::string stratification_text(const Stratification& s);

/* one-line JSON witness for a failed (or passing) verification outcome */
std::string witness_json(const VerificationOutcome& o);

} // namespace mary
