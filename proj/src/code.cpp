#include "fcs/code.hpp"

#include <algorithm>
#include <stdexcept>

namespace fcs {

namespace {

constexpr std::size_t kMaxGeneratorRows = 12;

// Rank over GF(2) by elimination on copies of the rows.
std::size_t gf2_rank(const std::vector<BitWord>& rows) {
    const std::size_t n = rows[0].size();
    std::vector<std::vector<std::uint8_t>> m;
    m.reserve(rows.size());
    for (const BitWord& r : rows) {
        std::vector<std::uint8_t> bits(n);
        for (std::size_t i = 0; i < n; ++i) bits[i] = r.bit(i) ? 1 : 0;
        m.push_back(std::move(bits));
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < n && rank < m.size(); ++col) {
        std::size_t pivot = rank;
        while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r != rank && m[r][col]) {
                for (std::size_t c = col; c < n; ++c) m[r][c] ^= m[rank][c];
            }
        }
        ++rank;
    }
    return rank;
}

std::string generator_hex_id(const std::vector<BitWord>& rows) {
    static const char* digits = "0123456789abcdef";
    std::string bits;
    for (const BitWord& r : rows) bits += r.to_string();
    while (bits.size() % 8 != 0) bits += '0';
    std::string hex;
    for (std::size_t i = 0; i < bits.size(); i += 4) {
        int v = 0;
        for (std::size_t j = 0; j < 4; ++j) v = (v << 1) | (bits[i + j] - '0');
        hex += digits[v];
    }
    return "generator:" + hex;
}

}  // namespace

CodeSet CodeSet::from_table(std::string id, std::vector<std::pair<BitWord, BitWord>> table) {
    if (table.size() < 2) {
        throw std::invalid_argument("code needs at least two codewords");
    }
    CodeSet code;
    code.id_ = std::move(id);
    code.k_ = table[0].first.size();
    code.n_ = table[0].second.size();
    for (const auto& [msg, cw] : table) {
        if (msg.size() != code.k_) {
            throw std::invalid_argument("inconsistent message length in code table");
        }
        if (cw.size() != code.n_) {
            throw std::invalid_argument("inconsistent codeword length in code table");
        }
    }
    code.table_ = std::move(table);
    code.finish_construction();
    return code;
}

CodeSet CodeSet::from_generator(std::vector<BitWord> rows, std::string id) {
    if (rows.empty()) {
        throw std::invalid_argument("generator needs at least one row");
    }
    if (rows.size() > kMaxGeneratorRows) {
        throw std::invalid_argument("generator limited to " + std::to_string(kMaxGeneratorRows) +
                                    " rows (message space is enumerated exhaustively)");
    }
    const std::size_t n = rows[0].size();
    const std::size_t k = rows.size();
    for (const BitWord& r : rows) {
        if (r.size() != n) {
            throw std::invalid_argument("inconsistent generator row length");
        }
    }
    if (gf2_rank(rows) != k) {
        throw std::invalid_argument("generator rows are linearly dependent; encoding map "
                                    "would not be one-to-one");
    }
    std::vector<std::pair<BitWord, BitWord>> table;
    table.reserve(std::size_t{1} << k);
    for (std::size_t m = 0; m < (std::size_t{1} << k); ++m) {
        std::string msg(k, '0');
        BitWord cw = BitWord::zeros(n);
        for (std::size_t i = 0; i < k; ++i) {
            if (m & (std::size_t{1} << (k - 1 - i))) {
                msg[i] = '1';
                cw = cw ^ rows[i];
            }
        }
        table.emplace_back(BitWord(msg), std::move(cw));
    }
    CodeSet code = from_table(id.empty() ? generator_hex_id(rows) : std::move(id),
                              std::move(table));
    code.generator_rows_ = std::move(rows);
    return code;
}

CodeSet CodeSet::paper_example() {
    std::vector<std::pair<BitWord, BitWord>> table = {
        {BitWord("0000"), BitWord("0000000")}, {BitWord("1011"), BitWord("0100101")},
        {BitWord("0101"), BitWord("0010011")}, {BitWord("1110"), BitWord("0110110")},
        {BitWord("1010"), BitWord("1011010")}, {BitWord("1100"), BitWord("1101100")},
        {BitWord("1111"), BitWord("1111111")},
    };
    return from_table("paper7", std::move(table));
}

CodeSet CodeSet::hamming74() {
    std::vector<BitWord> rows = {
        BitWord("1000110"),
        BitWord("0100101"),
        BitWord("0010011"),
        BitWord("0001111"),
    };
    return from_generator(std::move(rows), "hamming74");
}

void CodeSet::finish_construction() {
    std::sort(table_.begin(), table_.end());
    for (std::size_t i = 1; i < table_.size(); ++i) {
        if (table_[i].first == table_[i - 1].first) {
            throw std::invalid_argument("duplicate message in code table: " +
                                        table_[i].first.to_string());
        }
    }
    by_codeword_.reserve(table_.size());
    for (const auto& [msg, cw] : table_) by_codeword_.emplace_back(cw, msg);
    std::sort(by_codeword_.begin(), by_codeword_.end());
    for (std::size_t i = 1; i < by_codeword_.size(); ++i) {
        if (by_codeword_[i].first == by_codeword_[i - 1].first) {
            throw std::invalid_argument("encoding map is not one-to-one: codeword " +
                                        by_codeword_[i].first.to_string() + " repeats");
        }
    }
    codewords_.reserve(by_codeword_.size());
    for (const auto& [cw, msg] : by_codeword_) codewords_.push_back(cw);

    // exhaustive closure check, first failing pair kept as the witness
    for (std::size_t i = 0; i < codewords_.size() && !closure_counterexample_; ++i) {
        for (std::size_t j = i; j < codewords_.size(); ++j) {
            if (!contains(codewords_[i] ^ codewords_[j])) {
                closure_counterexample_ = {codewords_[i], codewords_[j]};
                break;
            }
        }
    }
}

std::vector<BitWord> CodeSet::messages() const {
    std::vector<BitWord> out;
    out.reserve(table_.size());
    for (const auto& [msg, cw] : table_) out.push_back(msg);
    return out;
}

bool CodeSet::contains(const BitWord& word) const {
    return std::binary_search(codewords_.begin(), codewords_.end(), word);
}

BitWord CodeSet::encode(const BitWord& message) const {
    const auto it = std::lower_bound(table_.begin(), table_.end(), message,
                                     [](const auto& entry, const BitWord& m) {
                                         return entry.first < m;
                                     });
    if (it == table_.end() || it->first != message) {
        throw std::invalid_argument("message " + message.to_string() +
                                    " is not in the message space of code '" + id_ + "'");
    }
    return it->second;
}

BitWord CodeSet::decode(const BitWord& codeword) const {
    const auto it = std::lower_bound(by_codeword_.begin(), by_codeword_.end(), codeword,
                                     [](const auto& entry, const BitWord& c) {
                                         return entry.first < c;
                                     });
    if (it == by_codeword_.end() || it->first != codeword) {
        throw std::invalid_argument("word " + codeword.to_string() +
                                    " is not a codeword of code '" + id_ +
                                    "'; run correction first");
    }
    return it->second;
}

BitWord CodeSet::correct(const BitWord& word) const {
    if (word.size() != n_) {
        throw std::invalid_argument("cannot correct a word of length " +
                                    std::to_string(word.size()) + " with code '" + id_ +
                                    "' (n = " + std::to_string(n_) + ")");
    }
    // codewords_ is sorted, so keeping the first strict minimum yields the
    // lexicographically smallest nearest neighbor
    const BitWord* best = &codewords_[0];
    std::size_t best_dist = hamming_distance(word, codewords_[0]);
    for (std::size_t i = 1; i < codewords_.size() && best_dist > 0; ++i) {
        const std::size_t d = hamming_distance(word, codewords_[i]);
        if (d < best_dist) {
            best_dist = d;
            best = &codewords_[i];
        }
    }
    return *best;
}

std::size_t CodeSet::min_distance() const {
    if (codewords_.size() < 2) {
        throw std::domain_error("minimum distance needs at least two codewords");
    }
    std::size_t best = n_ + 1;
    for (std::size_t i = 0; i < codewords_.size(); ++i) {
        for (std::size_t j = i + 1; j < codewords_.size(); ++j) {
            best = std::min(best, hamming_distance(codewords_[i], codewords_[j]));
        }
    }
    return best;
}

}  // namespace fcs
