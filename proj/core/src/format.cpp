#include "trias/format.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <tuple>

#include "trias/errors.hpp"
#include "trias/fields.hpp"

namespace trias {

std::uint64_t fnv1a64(const std::string& text) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[static_cast<std::size_t>(i)] = digits[v & 0xf];
        v >>= 4;
    }
    return s;
}

const ActionBlock* Document::find_rep(const std::string& name) const {
    for (const auto& b : reps)
        if (b.name == name) return &b;
    return nullptr;
}

const ActionBlock* Document::find_corep(const std::string& name) const {
    for (const auto& b : coreps)
        if (b.name == name) return &b;
    return nullptr;
}

const DeformationBlock* Document::find_deformation(const std::string& name) const {
    for (const auto& b : deformations)
        if (b.name == name) return &b;
    return nullptr;
}

namespace {

int parse_int(const std::string& tok, int line_no) {
    try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError("expected an integer, got '" + tok + "'", line_no);
    }
}

int op_index(const std::string& kw) {
    if (kw == "left" || kw == "lleft" || kw == "rleft" || kw == "lambda") return 0;
    if (kw == "right" || kw == "lright" || kw == "rright" || kw == "rho") return 1;
    return 2;
}

void check_range(int v, int lo, int hi, const char* what, int line_no) {
    if (v < lo || v >= hi)
        throw ParseError(std::string(what) + " index " + std::to_string(v) + " out of range",
                         line_no);
}

}  // namespace

Document parse_document(const std::string& text) {
    Document doc;
    bool have_field = false, have_dim = false;
    // 0 = header/products, 1 = rep, 2 = corep, 3 = deformation
    int section = 0;

    std::istringstream in(text);
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        std::istringstream ls(raw);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;) tok.push_back(t);
        if (tok.empty()) continue;
        const auto& kw = tok[0];

        auto need = [&](std::size_t n) {
            if (tok.size() != n)
                throw ParseError("'" + kw + "' expects " + std::to_string(n - 1) + " arguments",
                                 line_no);
        };

        if (kw == "field") {
            if (have_field) throw ParseError("duplicate field line", line_no);
            if (tok.size() == 2 && tok[1] == "q") {
                doc.rational = true;
            } else if (tok.size() == 3 && tok[1] == "p") {
                doc.rational = false;
                try {
                    doc.prime = std::stoll(tok[2]);
                } catch (const std::exception&) {
                    throw ParseError("bad prime '" + tok[2] + "'", line_no);
                }
                if (doc.prime <= 3 || doc.prime >= (std::int64_t(1) << 31) ||
                    !is_prime(doc.prime))
                    throw ParseError("modulus must be a prime in (3, 2^31)", line_no);
            } else {
                throw ParseError("field line must be 'field q' or 'field p <prime>'", line_no);
            }
            have_field = true;
        } else if (kw == "dim") {
            if (have_dim) throw ParseError("duplicate dim line", line_no);
            need(2);
            doc.dim = parse_int(tok[1], line_no);
            if (doc.dim < 1) throw ParseError("dim must be positive", line_no);
            have_dim = true;
        } else if (kw == "left" || kw == "right" || kw == "middle") {
            if (!have_field || !have_dim)
                throw ParseError("product line before field/dim header", line_no);
            if (section != 0) throw ParseError("product line inside a block", line_no);
            need(5);
            ProductEntry e{op_index(kw), parse_int(tok[1], line_no), parse_int(tok[2], line_no),
                           parse_int(tok[3], line_no), tok[4]};
            check_range(e.i, 0, doc.dim, "algebra", line_no);
            check_range(e.j, 0, doc.dim, "algebra", line_no);
            check_range(e.k, 0, doc.dim, "algebra", line_no);
            doc.products.push_back(std::move(e));
        } else if (kw == "rep" || kw == "corep") {
            if (!have_field || !have_dim)
                throw ParseError("block before field/dim header", line_no);
            need(3);
            ActionBlock blk;
            blk.name = tok[1];
            blk.dim = parse_int(tok[2], line_no);
            if (blk.dim < 1) throw ParseError("module dim must be positive", line_no);
            if (kw == "rep") {
                doc.reps.push_back(std::move(blk));
                section = 1;
            } else {
                doc.coreps.push_back(std::move(blk));
                section = 2;
            }
        } else if (kw == "deformation") {
            if (!have_field || !have_dim)
                throw ParseError("block before field/dim header", line_no);
            need(2);
            doc.deformations.push_back({tok[1], {}});
            section = 3;
        } else if (kw == "lleft" || kw == "lright" || kw == "lmiddle" || kw == "rleft" ||
                   kw == "rright" || kw == "rmiddle") {
            if (section != 1 && section != 2)
                throw ParseError("action line outside a rep/corep block", line_no);
            need(5);
            ActionEntry e;
            e.from_left = kw[0] == 'l';
            e.op = op_index(kw);
            auto& blk = section == 1 ? doc.reps.back() : doc.coreps.back();
            if (e.from_left) {
                e.i = parse_int(tok[1], line_no);
                e.u = parse_int(tok[2], line_no);
            } else {
                e.u = parse_int(tok[1], line_no);
                e.i = parse_int(tok[2], line_no);
            }
            e.v = parse_int(tok[3], line_no);
            e.coeff = tok[4];
            check_range(e.i, 0, doc.dim, "algebra", line_no);
            check_range(e.u, 0, blk.dim, "module", line_no);
            check_range(e.v, 0, blk.dim, "module", line_no);
            blk.entries.push_back(std::move(e));
        } else if (kw == "theta") {
            if (section != 3) throw ParseError("theta line outside a deformation block", line_no);
            need(7);
            if (tok[2] != "lambda" && tok[2] != "rho" && tok[2] != "mu")
                throw ParseError("theta kind must be lambda, rho or mu", line_no);
            DeformationEntry e{parse_int(tok[1], line_no), op_index(tok[2]),
                               parse_int(tok[3], line_no), parse_int(tok[4], line_no),
                               parse_int(tok[5], line_no), tok[6]};
            if (e.order < 1) throw ParseError("theta order must be >= 1", line_no);
            check_range(e.i, 0, doc.dim, "algebra", line_no);
            check_range(e.j, 0, doc.dim, "algebra", line_no);
            check_range(e.k, 0, doc.dim, "algebra", line_no);
            doc.deformations.back().entries.push_back(std::move(e));
        } else {
            throw ParseError("unknown keyword '" + kw + "'", line_no);
        }
    }
    if (!have_field || !have_dim) throw ParseError("missing field/dim header", line_no);
    return doc;
}

Document load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_document(buf.str());
}

std::string canonical_text(const Document& doc) {
    std::ostringstream out;
    if (doc.rational)
        out << "field q\n";
    else
        out << "field p " << doc.prime << "\n";
    out << "dim " << doc.dim << "\n";

    static const char* ops[] = {"left", "right", "middle"};
    auto products = doc.products;
    std::sort(products.begin(), products.end(), [](const auto& a, const auto& b) {
        return std::tie(a.op, a.i, a.j, a.k) < std::tie(b.op, b.i, b.j, b.k);
    });
    for (const auto& e : products)
        out << ops[e.op] << ' ' << e.i << ' ' << e.j << ' ' << e.k << ' ' << e.coeff << "\n";

    auto emit_actions = [&](const char* head, const std::vector<ActionBlock>& blocks) {
        for (const auto& blk : blocks) {
            out << head << ' ' << blk.name << ' ' << blk.dim << "\n";
            auto entries = blk.entries;
            std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
                return std::tie(a.from_left, a.op, a.i, a.u, a.v) <
                       std::tie(b.from_left, b.op, b.i, b.u, b.v);
            });
            for (const auto& e : entries) {
                out << (e.from_left ? "l" : "r") << ops[e.op] << ' ';
                if (e.from_left)
                    out << e.i << ' ' << e.u;
                else
                    out << e.u << ' ' << e.i;
                out << ' ' << e.v << ' ' << e.coeff << "\n";
            }
        }
    };
    emit_actions("rep", doc.reps);
    emit_actions("corep", doc.coreps);

    static const char* kinds[] = {"lambda", "rho", "mu"};
    for (const auto& blk : doc.deformations) {
        out << "deformation " << blk.name << "\n";
        auto entries = blk.entries;
        std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
            return std::tie(a.order, a.kind, a.i, a.j, a.k) <
                   std::tie(b.order, b.kind, b.i, b.j, b.k);
        });
        for (const auto& e : entries)
            out << "theta " << e.order << ' ' << kinds[e.kind] << ' ' << e.i << ' ' << e.j << ' '
                << e.k << ' ' << e.coeff << "\n";
    }
    return out.str();
}

}  // namespace trias
