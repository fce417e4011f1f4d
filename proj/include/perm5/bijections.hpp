#pragma once

#include <string>
#include <vector>

#include "perm5/patterns.hpp"
#include "perm5/word.hpp"

namespace perm5 {

// The four pattern classes the bijections act between.
const PatternSet& phi_domain_patterns();    // {3124, 3214}
const PatternSet& phi_image_patterns();     // {3142, 3241}
const PatternSet& source_class_patterns();  // {31245, 32145, 31254, 32154}
const PatternSet& target_class_patterns();  // {31425, 32415, 31524, 32514}

// Block decomposition of a {3124,3214}-avoiding word: the prefix up to the
// maximum splits into ascending runs ending at positions i_1 < ... < i_k < x,
// and the tail after the maximum is b b_k ... b_1 where the letters of b
// exceed w_{i_k} and the letters of b_j lie strictly between w_{i_{j-1}} and
// w_{i_j}. When the prefix is one ascending run, k = 0 and the whole tail
// is b.
struct TypeIDecomposition {
    Word prefix;                 // w_1 ... w_x
    std::vector<int> run_ends;   // i_1 < ... < i_k, 1-based
    int max_position = 0;        // x, 1-based
    Word top_block;              // b
    std::vector<Word> floor_blocks;  // floor_blocks[j-1] = b_j; w ends with b b_k ... b_1

    Word reassemble() const;
};

// Block decomposition of a {3142,3241}-avoiding word: its left-to-right
// maxima split by position into maximal consecutive runs, and gap_blocks[s-1]
// = d_s holds the letters between run s and run s+1 (the tail for the last
// run). Letters of d_1 are below the top of run 1; letters of d_s lie
// strictly between the tops of runs s-1 and s.
struct TypeIIDecomposition {
    struct Run {
        int start = 0;   // j_s, 1-based
        int length = 0;  // l_s + 1 letters
    };
    std::vector<Run> runs;
    std::vector<Word> run_letters;  // the letters of each run
    std::vector<Word> gap_blocks;   // d_1, ..., d_{k+1}

    Word reassemble() const;
};

TypeIDecomposition decompose_type_I(const Word& w);
TypeIIDecomposition decompose_type_II(const Word& v);

// The block-decomposition bijection between {3124,3214}- and {3142,3241}-
// avoiding words of distinct letters, and its inverse. phi preserves
// (Br, Ides, Lrmax, Lrmin, Iar).
Word phi(const Word& w);
Word psi(const Word& v);

// The recursive bijection between {31245,32145,31254,32154}- and
// {31425,32415,31524,32514}-avoiding words, and its inverse. alpha preserves
// (Ides, Lrmax, Lrmin, Rlmax, Iar).
Word alpha(const Word& w);
Word beta(const Word& v);

enum class Side { source, target };

// Structural case of a word within its avoidance class. Families I/II tag
// the source class, A/B the target class; trivial-* tags cover the branches
// of the recursion where no structure lemma is needed.
enum class CaseTag {
    trivial_lrmax1,
    trivial_rlmax1,
    trivial_ls_eq_s,
    trivial_s2,
    trivial_h2,
    I1, I2, I3,
    II1, II2, II3, II4,
    A1, A2, A3,
    B1, B2, B3,
};

std::string to_string(CaseTag tag);

// Assigns the unique applicable tag, verifying the structural claims of the
// corresponding lemma along the way. A std::logic_error signals a violated
// structure lemma, which the exhaustive sweeps use as an oracle.
CaseTag classify(const Word& w, Side side);

}  // namespace perm5
