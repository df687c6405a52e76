#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "trias/algebra.hpp"

namespace trias {

// FNV-1a 64-bit; fixture fingerprints in record output, not cryptographic.
std::uint64_t fnv1a64(const std::string& text);
std::string hex64(std::uint64_t v);

// --- text file model ---
//
// Header:   `field q` or `field p <prime>`, then `dim <d>`.
// Products: `left i j k c`, `right i j k c`, `middle i j k c`
//           meaning e_i * e_j gains the term c e_k.
// Blocks:   `rep <name> <m>` / `corep <name> <m>` introduce a module of
//           dimension m; inside, `lleft i u v c` (and lright, lmiddle) give
//           e_i * x_u = sum c x_v, while `rleft u i v c` (and rright,
//           rmiddle) give x_u * e_i = sum c x_v.
//           `deformation <name>` opens a block of `theta <order>
//           lambda|rho|mu i j k c` lines.
// `#` starts a comment; omitted entries are zero; later duplicate index
// lines overwrite earlier ones.

struct ProductEntry {
    int op;  // 0 left, 1 right, 2 middle
    int i, j, k;
    std::string coeff;
};

struct ActionEntry {
    bool from_left;
    int op;
    int i, u, v;  // algebra index i, module indices u (input), v (output)
    std::string coeff;
};

struct ActionBlock {
    std::string name;
    int dim = 0;
    std::vector<ActionEntry> entries;
};

struct DeformationEntry {
    int order;
    int kind;  // 0 lambda (left), 1 rho (right), 2 mu (middle)
    int i, j, k;
    std::string coeff;
};

struct DeformationBlock {
    std::string name;
    std::vector<DeformationEntry> entries;
};

struct Document {
    bool rational = true;
    std::int64_t prime = 0;  // meaningful when !rational
    int dim = 0;
    std::vector<ProductEntry> products;
    std::vector<ActionBlock> reps;
    std::vector<ActionBlock> coreps;
    std::vector<DeformationBlock> deformations;

    const ActionBlock* find_rep(const std::string& name) const;
    const ActionBlock* find_corep(const std::string& name) const;
    const DeformationBlock* find_deformation(const std::string& name) const;
};

Document parse_document(const std::string& text);
Document load_document(const std::string& path);

// stable serialization: sorted entries, verbatim coefficients; fingerprint
// input for record output
std::string canonical_text(const Document& doc);

template <class F>
TriasAlgebra<F> realize_algebra(const F& f, const Document& doc) {
    TriasAlgebra<F> A(f, doc.dim);
    for (const auto& e : doc.products) A.set(Op(e.op), e.i, e.j, e.k, f.parse(e.coeff));
    return A;
}

template <class F>
ModuleActions<F> realize_actions(const F& f, int alg_dim, const ActionBlock& blk) {
    ModuleActions<F> M(f, alg_dim, blk.dim);
    for (const auto& e : blk.entries) {
        if (e.from_left)
            M.set_left(Op(e.op), e.i, e.u, e.v, f.parse(e.coeff));
        else
            M.set_right(Op(e.op), e.u, e.i, e.v, f.parse(e.coeff));
    }
    return M;
}

}  // namespace trias
