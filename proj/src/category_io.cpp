#include "fc/category_io.hpp"

#include <fstream>
#include <memory>
#include <sstream>

namespace fc {

namespace {

// --- minimal JSON with // comments and source positions ---------------------

struct Node;
using NodePtr = std::shared_ptr<Node>;

struct Node {
    enum class Type { Int, Str, Arr, Obj } type;
    int line = 0, col = 0;
    long long num = 0;
    std::string str;
    std::vector<NodePtr> arr;
    std::vector<std::pair<std::string, NodePtr>> obj;  // insertion order

    const NodePtr* find(const std::string& key) const {
        for (const auto& [k, v] : obj)
            if (k == key) return &v;
        return nullptr;
    }
};

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    NodePtr parse_document() {
        NodePtr v = parse_value();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing content");
        return v;
    }

private:
    const std::string& s_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;

    [[noreturn]] void fail(const std::string& reason) const { throw ParseError(line_, col_, reason); }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    char advance() {
        char c = s_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    void skip_ws() {
        while (pos_ < s_.size()) {
            char c = peek();
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                advance();
            } else if (c == '/' && pos_ + 1 < s_.size() && s_[pos_ + 1] == '/') {
                while (pos_ < s_.size() && peek() != '\n') advance();
            } else {
                break;
            }
        }
    }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        advance();
    }

    NodePtr parse_value() {
        skip_ws();
        if (pos_ == s_.size()) fail("unexpected end of input");
        auto node = std::make_shared<Node>();
        node->line = line_;
        node->col = col_;
        char c = peek();
        if (c == '{') {
            node->type = Node::Type::Obj;
            advance();
            skip_ws();
            if (peek() == '}') {
                advance();
                return node;
            }
            while (true) {
                skip_ws();
                if (peek() != '"') fail("expected object key");
                std::string key = parse_string_raw();
                skip_ws();
                expect(':');
                node->obj.emplace_back(key, parse_value());
                skip_ws();
                if (peek() == ',') {
                    advance();
                    continue;
                }
                expect('}');
                break;
            }
            return node;
        }
        if (c == '[') {
            node->type = Node::Type::Arr;
            advance();
            skip_ws();
            if (peek() == ']') {
                advance();
                return node;
            }
            while (true) {
                node->arr.push_back(parse_value());
                skip_ws();
                if (peek() == ',') {
                    advance();
                    continue;
                }
                expect(']');
                break;
            }
            return node;
        }
        if (c == '"') {
            node->type = Node::Type::Str;
            node->str = parse_string_raw();
            return node;
        }
        if (c == '-' || (c >= '0' && c <= '9')) {
            node->type = Node::Type::Int;
            std::string digits;
            if (c == '-') digits.push_back(advance());
            while (pos_ < s_.size() && peek() >= '0' && peek() <= '9') digits.push_back(advance());
            if (digits.empty() || digits == "-") fail("bad number");
            node->num = std::stoll(digits);
            return node;
        }
        fail("unexpected character");
    }

    std::string parse_string_raw() {
        expect('"');
        std::string out;
        while (true) {
            if (pos_ == s_.size()) fail("unterminated string");
            char c = advance();
            if (c == '"') break;
            if (c == '\\') {
                if (pos_ == s_.size()) fail("bad escape");
                char e = advance();
                switch (e) {
                    case '"': out.push_back('"'); break;
                    case '\\': out.push_back('\\'); break;
                    case 'n': out.push_back('\n'); break;
                    case 't': out.push_back('\t'); break;
                    default: fail("unsupported escape");
                }
            } else {
                out.push_back(c);
            }
        }
        return out;
    }
};

[[noreturn]] void fail_at(const Node& n, const std::string& reason) {
    throw ParseError(n.line, n.col, reason);
}

const Node& get_field(const Node& obj, const std::string& key) {
    if (obj.type != Node::Type::Obj) fail_at(obj, "expected object");
    const NodePtr* p = obj.find(key);
    if (!p) fail_at(obj, "missing field \"" + key + "\"");
    return **p;
}

long long get_int(const Node& n, const std::string& what) {
    if (n.type != Node::Type::Int) fail_at(n, what + " must be an integer");
    return n.num;
}

const std::string& get_str(const Node& n, const std::string& what) {
    if (n.type != Node::Type::Str) fail_at(n, what + " must be a string");
    return n.str;
}

Rational parse_rational_node(const Node& n) {
    const std::string& s = get_str(n, "coefficient");
    try {
        return Rational::parse_canonical(s);
    } catch (const std::exception& e) {
        fail_at(n, std::string("bad rational \"") + s + "\": " + e.what());
    }
}

Cyclotomic parse_cyclotomic_node(const Node& n) {
    if (n.type != Node::Type::Arr || n.arr.size() != 4)
        fail_at(n, "cyclotomic value must be an array of 4 rationals");
    return Cyclotomic(parse_rational_node(*n.arr[0]), parse_rational_node(*n.arr[1]),
                      parse_rational_node(*n.arr[2]), parse_rational_node(*n.arr[3]));
}

Mat<Cyclotomic> parse_matrix_node(const Node& n, const std::string& what) {
    if (n.type != Node::Type::Arr || n.arr.empty()) fail_at(n, what + " must be a non-empty matrix");
    size_t rows = n.arr.size();
    size_t cols = 0;
    Mat<Cyclotomic> m;
    for (size_t i = 0; i < rows; ++i) {
        const Node& row = *n.arr[i];
        if (row.type != Node::Type::Arr) fail_at(row, what + " rows must be arrays");
        if (i == 0) {
            cols = row.arr.size();
            m = Mat<Cyclotomic>(rows, cols);
        } else if (row.arr.size() != cols) {
            fail_at(row, what + " rows have inconsistent lengths");
        }
        for (size_t j = 0; j < cols; ++j) m.at(i, j) = parse_cyclotomic_node(*row.arr[j]);
    }
    return m;
}

// --- writer ------------------------------------------------------------------

void write_escaped(std::string& out, const std::string& s) {
    out.push_back('"');
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
}

void write_cyclotomic(std::string& out, const Cyclotomic& c) {
    out.push_back('[');
    for (int k = 0; k < 4; ++k) {
        if (k) out += ", ";
        write_escaped(out, c.coeff(k).to_string());
    }
    out.push_back(']');
}

void write_matrix(std::string& out, const Mat<Cyclotomic>& m, const std::string& indent) {
    out += "[\n";
    for (size_t i = 0; i < m.rows(); ++i) {
        out += indent + "  [";
        for (size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ", ";
            write_cyclotomic(out, m.at(i, j));
        }
        out += i + 1 < m.rows() ? "],\n" : "]\n";
    }
    out += indent + "]";
}

std::string assoc_file_key(const FusionRing& r, const AssocKey& k) {
    return r.label(k[0]) + "," + r.label(k[1]) + "," + r.label(k[2]) + "->" + r.label(k[3]);
}

std::string rsym_file_key(const FusionRing& r, const std::array<size_t, 3>& k) {
    return r.label(k[0]) + "," + r.label(k[1]) + "->" + r.label(k[2]);
}

} // namespace

std::string serialize(const CategoryFile& f) {
    const FusionRing& ring = f.ring();
    std::string out;
    out += "{\n";
    out += "  \"cyclotomic_order\": " + std::to_string(f.cyclotomic_order) + ",\n";
    out += "  \"format_version\": " + std::to_string(f.format_version) + ",\n";
    out += "  \"ring\": {\n";
    out += "    \"rank\": " + std::to_string(ring.rank()) + ",\n";
    out += "    \"labels\": [";
    for (size_t i = 0; i < ring.rank(); ++i) {
        if (i) out += ", ";
        write_escaped(out, ring.label(i));
    }
    out += "],\n";
    out += "    \"unit\": " + std::to_string(ring.unit()) + ",\n";
    out += "    \"dual\": [";
    for (size_t i = 0; i < ring.rank(); ++i) {
        if (i) out += ", ";
        out += std::to_string(ring.dual(i));
    }
    out += "],\n";
    out += "    \"fusion\": [";
    for (size_t i = 0; i < ring.rank(); ++i) {
        if (i) out += ", ";
        out += "[";
        for (size_t j = 0; j < ring.rank(); ++j) {
            if (j) out += ", ";
            out += "[";
            for (size_t k = 0; k < ring.rank(); ++k) {
                if (k) out += ", ";
                out += std::to_string(ring.n(i, j, k));
            }
            out += "]";
        }
        out += "]";
    }
    out += "]\n  },\n";

    out += "  \"associators\": {";
    // std::map order on string keys: deterministic
    std::map<std::string, const Mat<Cyclotomic>*> sorted;
    for (const auto& [key, m] : f.assoc.stored()) {
        // unit-involving identities are implicit
        bool unit_inv = key[0] == ring.unit() || key[1] == ring.unit() || key[2] == ring.unit();
        if (unit_inv && m.is_identity()) continue;
        sorted[assoc_file_key(ring, key)] = &m;
    }
    bool first = true;
    for (const auto& [key, m] : sorted) {
        out += first ? "\n" : ",\n";
        first = false;
        out += "    ";
        write_escaped(out, key);
        out += ": ";
        write_matrix(out, *m, "    ");
    }
    out += first ? "}" : "\n  }";

    auto write_strand_section = [&](const char* name, const std::vector<Cyclotomic>& vals) {
        out += ",\n  \"";
        out += name;
        out += "\": [";
        for (size_t i = 0; i < vals.size(); ++i) {
            if (i) out += ", ";
            write_cyclotomic(out, vals[i]);
        }
        out += "]";
    };
    if (f.birth) write_strand_section("birth", *f.birth);
    if (f.death) write_strand_section("death", *f.death);
    if (f.pivotal_t) write_strand_section("pivotal_t", *f.pivotal_t);
    if (f.r_symbols) {
        out += ",\n  \"r_symbols\": {";
        std::map<std::string, const Mat<Cyclotomic>*> rsorted;
        for (const auto& [key, m] : *f.r_symbols) rsorted[rsym_file_key(ring, key)] = &m;
        bool rfirst = true;
        for (const auto& [key, m] : rsorted) {
            out += rfirst ? "\n" : ",\n";
            rfirst = false;
            out += "    ";
            write_escaped(out, key);
            out += ": ";
            write_matrix(out, *m, "    ");
        }
        out += rfirst ? "}" : "\n  }";
    }
    out += "\n}\n";
    return out;
}

namespace {

size_t ring_label_at(const FusionRing& ring, const Node& where, const std::string& name) {
    auto idx = ring.label_index(name);
    if (!idx) fail_at(where, "unknown strand label \"" + name + "\"");
    return *idx;
}

} // namespace

CategoryFile parse(const std::string& text) {
    Parser p(text);
    NodePtr rootp = p.parse_document();
    const Node& root = *rootp;
    if (root.type != Node::Type::Obj) fail_at(root, "top level must be an object");

    CategoryFile f;
    long long version = get_int(get_field(root, "format_version"), "format_version");
    if (version != 1) throw UnsupportedVersion(version);
    f.format_version = 1;
    long long order = get_int(get_field(root, "cyclotomic_order"), "cyclotomic_order");
    if (order != 12) fail_at(get_field(root, "cyclotomic_order"), "cyclotomic_order must be 12");

    const Node& ringn = get_field(root, "ring");
    long long rank = get_int(get_field(ringn, "rank"), "rank");
    if (rank < 1 || rank > 64) fail_at(get_field(ringn, "rank"), "rank out of range");
    const Node& labelsn = get_field(ringn, "labels");
    if (labelsn.type != Node::Type::Arr || labelsn.arr.size() != static_cast<size_t>(rank))
        fail_at(labelsn, "labels must be an array of length rank");
    std::vector<std::string> labels;
    for (const auto& n : labelsn.arr) labels.push_back(get_str(*n, "label"));
    long long unit = get_int(get_field(ringn, "unit"), "unit");
    if (unit < 0 || unit >= rank) fail_at(get_field(ringn, "unit"), "unit out of range");
    const Node& dualn = get_field(ringn, "dual");
    if (dualn.type != Node::Type::Arr || dualn.arr.size() != static_cast<size_t>(rank))
        fail_at(dualn, "dual must be an array of length rank");
    std::vector<size_t> dual;
    for (const auto& n : dualn.arr) {
        long long d = get_int(*n, "dual entry");
        if (d < 0 || d >= rank) fail_at(*n, "dual entry out of range");
        dual.push_back(static_cast<size_t>(d));
    }
    const Node& fus = get_field(ringn, "fusion");
    if (fus.type != Node::Type::Arr || fus.arr.size() != static_cast<size_t>(rank))
        fail_at(fus, "fusion tensor must have rank planes");
    std::vector<std::vector<std::vector<int>>> tensor;
    for (const auto& plane : fus.arr) {
        if (plane->type != Node::Type::Arr || plane->arr.size() != static_cast<size_t>(rank))
            fail_at(*plane, "fusion tensor plane has wrong shape");
        std::vector<std::vector<int>> pl;
        for (const auto& rown : plane->arr) {
            if (rown->type != Node::Type::Arr || rown->arr.size() != static_cast<size_t>(rank))
                fail_at(*rown, "fusion tensor row has wrong shape");
            std::vector<int> rowv;
            for (const auto& cell : rown->arr) {
                long long v = get_int(*cell, "fusion multiplicity");
                if (v < 0 || v > 1000) fail_at(*cell, "fusion multiplicity out of range");
                rowv.push_back(static_cast<int>(v));
            }
            pl.push_back(std::move(rowv));
        }
        tensor.push_back(std::move(pl));
    }
    FusionRing ring;
    try {
        ring = FusionRing(labels, static_cast<size_t>(unit), dual, tensor);
    } catch (const std::exception& e) {
        fail_at(ringn, e.what());
    }
    f.assoc = AssociatorSet(ring);

    const Node& assocn = get_field(root, "associators");
    if (assocn.type != Node::Type::Obj) fail_at(assocn, "associators must be an object");
    for (const auto& [key, valp] : assocn.obj) {
        // key "x,y,z->u"
        size_t arrow = key.find("->");
        size_t c1 = key.find(',');
        size_t c2 = c1 == std::string::npos ? std::string::npos : key.find(',', c1 + 1);
        if (arrow == std::string::npos || c1 == std::string::npos || c2 == std::string::npos ||
            c2 > arrow)
            fail_at(*valp, "associator key must look like \"x,y,z->u\"");
        size_t x = ring_label_at(ring, *valp, key.substr(0, c1));
        size_t y = ring_label_at(ring, *valp, key.substr(c1 + 1, c2 - c1 - 1));
        size_t z = ring_label_at(ring, *valp, key.substr(c2 + 1, arrow - c2 - 1));
        size_t u = ring_label_at(ring, *valp, key.substr(arrow + 2));
        Mat<Cyclotomic> m = parse_matrix_node(*valp, "associator " + key);
        size_t want = assoc_dim(ring, x, y, z, u);
        if (m.rows() != want || m.cols() != want)
            fail_at(*valp, "associator " + key + " must be " + std::to_string(want) + "x" +
                               std::to_string(want));
        f.assoc.set_matrix(x, y, z, u, std::move(m));
    }

    auto read_strand_section = [&](const char* name) -> std::optional<std::vector<Cyclotomic>> {
        const NodePtr* n = root.find(name);
        if (!n) return std::nullopt;
        if ((*n)->type != Node::Type::Arr || (*n)->arr.size() != ring.rank())
            fail_at(**n, std::string(name) + " must be an array with one value per strand");
        std::vector<Cyclotomic> vals;
        for (const auto& c : (*n)->arr) vals.push_back(parse_cyclotomic_node(*c));
        return vals;
    };
    f.birth = read_strand_section("birth");
    f.death = read_strand_section("death");
    f.pivotal_t = read_strand_section("pivotal_t");

    if (const NodePtr* rs = root.find("r_symbols")) {
        if ((*rs)->type != Node::Type::Obj) fail_at(**rs, "r_symbols must be an object");
        std::map<std::array<size_t, 3>, Mat<Cyclotomic>> out;
        for (const auto& [key, valp] : (*rs)->obj) {
            size_t arrow = key.find("->");
            size_t c1 = key.find(',');
            if (arrow == std::string::npos || c1 == std::string::npos || c1 > arrow)
                fail_at(*valp, "r_symbols key must look like \"x,y->z\"");
            size_t x = ring_label_at(ring, *valp, key.substr(0, c1));
            size_t y = ring_label_at(ring, *valp, key.substr(c1 + 1, arrow - c1 - 1));
            size_t z = ring_label_at(ring, *valp, key.substr(arrow + 2));
            Mat<Cyclotomic> m = parse_matrix_node(*valp, "r_symbols " + key);
            size_t want = static_cast<size_t>(ring.n(x, y, z));
            if (m.rows() != want || m.cols() != want)
                fail_at(*valp, "r_symbols " + key + " must be " + std::to_string(want) + "x" +
                                   std::to_string(want));
            out[{x, y, z}] = std::move(m);
        }
        f.r_symbols = std::move(out);
    }
    return f;
}

CategoryFile load_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

void save_file(const std::string& path, const CategoryFile& f) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << serialize(f);
}

} // namespace fc
