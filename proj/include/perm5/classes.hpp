#pragma once

#include <optional>
#include <string>
#include <vector>

#include "perm5/patterns.hpp"

namespace perm5 {

// The thirteen quadruples of length-5 patterns conjectured to share the
// counting sequence A212198; the first four are the proved ones.
const std::vector<std::vector<std::string>>& conjecture13_patterns();

struct NamedClass {
    std::string name;
    std::string patterns_csv;  // empty for the inversion-sequence class
};

// All class aliases: the thirteen conjecture classes (canonical name
// "C" + the four concatenated patterns, plus shorthands conj1..conj13),
// I201210, C31243214 and C31423241.
const std::vector<NamedClass>& named_classes();

bool is_inversion_class_alias(const std::string& name);  // I201210

// Resolves an alias to its pattern set; nullopt for unknown aliases and for
// I201210 (which enumerates inversion sequences, not permutations).
std::optional<PatternSet> lookup_class(const std::string& name);

}  // namespace perm5
