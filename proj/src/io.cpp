#include "fcs/io.hpp"

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace fcs::io {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r\n");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t\r\n");
    return s.substr(begin, end - begin + 1);
}

// A parsed document: scalar fields plus at most one row section
// ("table" or "generator").
struct Document {
    std::map<std::string, std::string> fields;
    std::string section;
    std::vector<std::string> rows;
};

Document parse_document(std::istream& in) {
    Document doc;
    std::string line;
    bool in_section = false;
    while (std::getline(in, line)) {
        const std::string text = trim(line);
        if (text.empty() || text[0] == '#') continue;
        if (in_section) {
            doc.rows.push_back(text);
            continue;
        }
        const auto colon = text.find(':');
        if (colon == std::string::npos) {
            throw std::runtime_error("malformed line (expected 'key: value'): '" + text + "'");
        }
        const std::string key = trim(text.substr(0, colon));
        const std::string value = trim(text.substr(colon + 1));
        if (value.empty()) {
            if (key != "table" && key != "generator") {
                throw std::runtime_error("missing value for field '" + key + "'");
            }
            doc.section = key;
            in_section = true;
            continue;
        }
        if (!doc.fields.emplace(key, value).second) {
            throw std::runtime_error("duplicate field '" + key + "'");
        }
    }
    return doc;
}

const std::string& require_field(const Document& doc, const std::string& key,
                                 const char* what) {
    const auto it = doc.fields.find(key);
    if (it == doc.fields.end()) {
        throw std::runtime_error(std::string(what) + " is missing field '" + key + "'");
    }
    return it->second;
}

std::size_t parse_size(const std::string& value, const std::string& key) {
    try {
        std::size_t pos = 0;
        const unsigned long long v = std::stoull(value, &pos);
        if (pos != value.size()) throw std::invalid_argument(value);
        return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
        throw std::runtime_error("field '" + key + "' is not a valid integer: '" + value + "'");
    }
}

CodeSet code_from_document(const Document& doc, const std::string& id) {
    const std::size_t n = parse_size(require_field(doc, "n", "code definition"), "n");
    const std::size_t k = parse_size(require_field(doc, "k", "code definition"), "k");
    CodeSet code = [&] {
        if (doc.section == "generator") {
            std::vector<BitWord> rows;
            rows.reserve(doc.rows.size());
            for (const std::string& row : doc.rows) rows.emplace_back(row);
            return CodeSet::from_generator(std::move(rows), id);
        }
        if (doc.section == "table") {
            std::vector<std::pair<BitWord, BitWord>> table;
            table.reserve(doc.rows.size());
            for (const std::string& row : doc.rows) {
                std::istringstream fields(row);
                std::string msg, cw, extra;
                if (!(fields >> msg >> cw) || (fields >> extra)) {
                    throw std::runtime_error("malformed table row: '" + row + "'");
                }
                table.emplace_back(BitWord(msg), BitWord(cw));
            }
            return CodeSet::from_table(id, std::move(table));
        }
        throw std::runtime_error("code definition needs a 'table:' or 'generator:' section");
    }();
    if (code.n() != n || code.k() != k) {
        throw std::runtime_error("declared n/k (" + std::to_string(n) + "/" + std::to_string(k) +
                                 ") do not match the code body (" + std::to_string(code.n()) +
                                 "/" + std::to_string(code.k()) + ")");
    }
    return code;
}

void write_code_body(const CodeSet& code, std::ostream& out) {
    out << "n: " << code.n() << "\n";
    out << "k: " << code.k() << "\n";
    if (!code.generator_rows().empty()) {
        out << "generator:\n";
        for (const BitWord& row : code.generator_rows()) out << row.to_string() << "\n";
    } else {
        out << "table:\n";
        for (const BitWord& msg : code.messages()) {
            out << msg.to_string() << " " << code.encode(msg).to_string() << "\n";
        }
    }
}

bool is_builtin(const std::string& id) {
    return id == "paper7" || id == "hamming74";
}

CodeSet builtin_code(const std::string& id) {
    if (id == "paper7") return CodeSet::paper_example();
    if (id == "hamming74") return CodeSet::hamming74();
    throw std::runtime_error("unknown builtin code '" + id + "'");
}

}  // namespace

void write_code(const CodeSet& code, std::ostream& out) {
    out << "id: " << code.id() << "\n";
    write_code_body(code, out);
}

CodeSet read_code(std::istream& in) {
    const Document doc = parse_document(in);
    return code_from_document(doc, require_field(doc, "id", "code file"));
}

void write_params(const SchemeParams& params, std::ostream& out) {
    out << "code: " << params.code.id() << "\n";
    out << "z0: " << params.z0.to_string() << "\n";
    out << "combiner: " << SchemeParams::kCombiner << "\n";
    out << "correction: " << SchemeParams::kCorrection << "\n";
    out << "prng: " << SchemeParams::kPrng << "\n";
    if (!is_builtin(params.code.id())) {
        write_code_body(params.code, out);
    }
}

SchemeParams read_params(std::istream& in) {
    const Document doc = parse_document(in);
    const std::string& code_id = require_field(doc, "code", "params file");
    if (require_field(doc, "combiner", "params file") != SchemeParams::kCombiner) {
        throw std::runtime_error("unsupported combiner (only XOR is implemented)");
    }
    if (require_field(doc, "correction", "params file") != SchemeParams::kCorrection) {
        throw std::runtime_error("unsupported correction (only nearest is implemented)");
    }
    if (require_field(doc, "prng", "params file") != SchemeParams::kPrng) {
        throw std::runtime_error("unsupported prng (only splitmix64 is implemented)");
    }
    Rational z0;
    try {
        z0 = Rational::parse(require_field(doc, "z0", "params file"));
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(e.what());
    }
    CodeSet code =
        is_builtin(code_id) ? builtin_code(code_id) : code_from_document(doc, code_id);
    try {
        return setup(std::move(code), z0);
    } catch (const std::domain_error& e) {
        throw std::runtime_error(e.what());
    }
}

void write_commitment(const BitWord& commitment, std::ostream& out,
                      const std::vector<std::string>& comments) {
    for (const std::string& c : comments) out << "# " << c << "\n";
    out << "n: " << commitment.size() << "\n";
    out << "word: " << commitment.to_string() << "\n";
}

BitWord read_commitment(std::istream& in) {
    const Document doc = parse_document(in);
    const BitWord word{require_field(doc, "word", "commitment file")};
    if (parse_size(require_field(doc, "n", "commitment file"), "n") != word.size()) {
        throw std::runtime_error("commitment file: declared n does not match the word");
    }
    return word;
}

void write_opening(const Opening& opening, std::ostream& out,
                   const std::vector<std::string>& comments) {
    for (const std::string& c : comments) out << "# " << c << "\n";
    out << "n: " << opening.encoded_message.size() << "\n";
    out << "encoded_message: " << opening.encoded_message.to_string() << "\n";
    out << "witness: " << opening.witness.to_string() << "\n";
}

Opening read_opening(std::istream& in) {
    const Document doc = parse_document(in);
    Opening opening{BitWord{require_field(doc, "encoded_message", "opening file")},
                    BitWord{require_field(doc, "witness", "opening file")}};
    const std::size_t n = parse_size(require_field(doc, "n", "opening file"), "n");
    if (opening.encoded_message.size() != n || opening.witness.size() != n) {
        throw std::runtime_error("opening file: declared n does not match the words");
    }
    return opening;
}

void write_sweep_records(const std::vector<SweepRow>& rows, std::ostream& out) {
    for (const SweepRow& row : rows) {
        out << "p=" << row.flip_probability.to_string()
            << " p_dec=" << row.flip_probability.to_double()
            << " trials=" << row.stats.trials
            << " accepted=" << row.stats.accepted
            << " rate=" << row.stats.rate.to_string()
            << " rate_dec=" << row.stats.rate.to_double()
            << " mean_nearness=" << row.stats.mean_nearness.to_string()
            << " mean_nearness_dec=" << row.stats.mean_nearness.to_double()
            << " recovery_correct=" << row.stats.recovery_correct << "\n";
    }
}

CodeSet resolve_code(const std::string& selector) {
    if (is_builtin(selector)) return builtin_code(selector);
    std::ifstream file(selector);
    if (!file) {
        throw std::runtime_error("cannot open code file '" + selector +
                                 "' (and it is not a builtin code name)");
    }
    return read_code(file);
}

}  // namespace fcs::io
