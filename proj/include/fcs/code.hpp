// Binary codes: a finite codeword set with a one-to-one encoding map,
// nearest-neighbor correction, and exhaustive structural checks.
//
// Codes here are small by design; every structural property
// (XOR closure, minimum distance) is verified by enumeration,
// never assumed.

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fcs/bitword.hpp"

namespace fcs {

class CodeSet {
  public:
    /// Builds a code from an explicit message -> codeword table.
    /// The table must be a bijection with at least two entries.
    static CodeSet from_table(std::string id,
                              std::vector<std::pair<BitWord, BitWord>> table);

    /// Builds a linear code spanned by generator rows; messages are all of
    /// {0,1}^k and message bit i (leftmost = 0) selects row i. Rows must be
    /// linearly independent over GF(2). Limited to k <= 12 so that the
    /// exhaustive structural checks stay cheap.
    static CodeSet from_generator(std::vector<BitWord> rows, std::string id = "");

    /// The literal 7-message demonstration code shipped as "paper7".
    /// Not closed under XOR; closure_counterexample() names a witness pair.
    static CodeSet paper_example();

    /// Systematic Hamming(7,4), minimum distance 3, shipped as "hamming74".
    static CodeSet hamming74();

    const std::string& id() const { return id_; }
    std::size_t n() const { return n_; }
    std::size_t k() const { return k_; }
    bool closed_under_xor() const { return closure_counterexample_ == std::nullopt; }
    /// A pair of codewords whose XOR leaves the set, when one exists.
    const std::optional<std::pair<BitWord, BitWord>>& closure_counterexample() const {
        return closure_counterexample_;
    }

    /// Codewords in lexicographic order.
    const std::vector<BitWord>& codewords() const { return codewords_; }
    /// Messages in lexicographic order.
    std::vector<BitWord> messages() const;
    /// Generator rows when the code was built from a generator, else empty.
    const std::vector<BitWord>& generator_rows() const { return generator_rows_; }

    bool contains(const BitWord& word) const;

    BitWord encode(const BitWord& message) const;
    BitWord decode(const BitWord& codeword) const;

    /// Nearest codeword to `word`; ties broken toward the lexicographically
    /// smallest minimizer. Codewords map to themselves.
    BitWord correct(const BitWord& word) const;

    /// Minimum Hamming distance over all distinct codeword pairs.
    std::size_t min_distance() const;

  private:
    CodeSet() = default;
    void finish_construction();

    std::string id_;
    std::size_t n_ = 0;
    std::size_t k_ = 0;
    std::vector<std::pair<BitWord, BitWord>> table_;  // sorted by message
    std::vector<BitWord> codewords_;                  // sorted lexicographically
    std::vector<std::pair<BitWord, BitWord>> by_codeword_;
    std::vector<BitWord> generator_rows_;
    std::optional<std::pair<BitWord, BitWord>> closure_counterexample_;
};

}  // namespace fcs
