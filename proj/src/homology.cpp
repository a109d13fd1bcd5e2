#include "pbwkit/homology.hpp"

#include "pbwkit/deformation.hpp"
#include "pbwkit/error.hpp"

#include <algorithm>
#include <functional>

namespace pbwkit {

namespace {

// Basis of (A⊗R)^m: blocks indexed by the relation degree j, each of size
// h(m - j) * dim R^j, ordered (normal word, relation).
struct TensorSlice {
    std::vector<int> js;
    std::vector<std::size_t> offset;
    std::vector<std::size_t> rdim;
    std::size_t size = 0;

    TensorSlice(PresentedRing& a, const GradedSubspace& r, int m) {
        for (int j : r.degrees()) {
            if (j > m) break;
            js.push_back(j);
            offset.push_back(size);
            rdim.push_back(r.dim(j));
            size += a.hilbert(m - j) * r.dim(j);
        }
    }
    std::size_t block(int j) const {
        return std::size_t(std::find(js.begin(), js.end(), j) - js.begin());
    }
};

// d_2 on (A⊗R)^m, rows indexed like TensorSlice, columns pos * g + letter.
SparseMatrix d2_matrix(PresentedRing& a, const GradedSubspace& r, const std::vector<std::vector<Element>>& rbasis,
                       const TensorSlice& s, int m) {
    const std::size_t g = a.generators();
    GradedQuotient& q = a.quotient();
    SparseMatrix d;
    d.ncols = a.hilbert(m - 1) * g;
    d.rows.reserve(s.size);
    for (std::size_t b = 0; b < s.js.size(); ++b) {
        const int j = s.js[b];
        const auto& normal = q.normal_monomials(m - j);
        const std::uint64_t shift = checked_pow(g, j - 1);
        for (Col u : normal)
            for (const auto& rel : rbasis[std::size_t(j)]) {
                std::vector<Entry> t;
                for (const auto& [w, c] : rel.terms()) {
                    Letter last = w.back();
                    Word prefix(w.begin(), w.end() - 1);
                    Col prod = Col(std::uint64_t(u) * shift + word_index(prefix, g));
                    for (const auto& e : q.normal_form_monomial(prod, m - 1))
                        t.push_back({Col(e.col * g + last), c * e.val});
                }
                d.rows.push_back(canonicalize(std::move(t)));
            }
    }
    (void)r;
    return d;
}

} // namespace

Tor3Table tor3_resolution(PresentedRing& a, int bound) {
    const GradedSubspace& r = a.relations();
    const std::size_t g = a.generators();
    if (r.dim(1)) throw Error(ErrorCode::InvalidPresentation, "relations of degree 1 are not supported by the resolution");
    if (!is_bimodule_of_relations(r))
        throw Error(ErrorCode::NotMinimalRelations, "R meets T^1 I + I T^1; minimize the relations first");
    std::vector<std::vector<Element>> rbasis(std::size_t(std::max(bound, r.max_degree())) + 1);
    for (int j : r.degrees())
        if (j <= bound) rbasis[std::size_t(j)] = r.basis(j);

    Tor3Table out;
    out.bound = bound;
    GradedQuotient& q = a.quotient();
    std::vector<SparseVec> prev_kernel;
    TensorSlice prev_slice(a, r, 0);
    for (int m = 0; m <= bound; ++m) {
        TensorSlice s(a, r, m);
        std::vector<SparseVec> kern;
        if (s.size) {
            SparseMatrix d = d2_matrix(a, r, rbasis, s, m);
            // d_1 d_2 = 0
            for (const auto& row : d.rows) {
                std::vector<Entry> t;
                for (const auto& e : row)
                    for (const auto& f : q.right_action(e.col / g, m - 1, e.col % g)) t.push_back({f.col, e.val * f.val});
                if (!canonicalize(std::move(t)).empty())
                    throw Error(ErrorCode::DomainMismatch, "d1 d2 != 0 in degree " + std::to_string(m));
            }
            kern = left_kernel(d).rows;
            // K_2 ⊆ A^+ ⊗ R: no component on A^0 ⊗ R^m
            std::size_t b = s.block(m);
            if (b < s.js.size())
                for (const auto& v : kern)
                    for (const auto& e : v)
                        if (e.col >= s.offset[b])
                            throw Error(ErrorCode::DomainMismatch, "kernel of d2 meets A^0 ⊗ R");
        }
        // A^1 · K_2^(m-1) inside (A⊗R)^m
        Echelon image(s.size);
        for (const auto& v : prev_kernel)
            for (std::size_t letter = 0; letter < g; ++letter) {
                std::vector<Entry> t;
                for (const auto& e : v) {
                    std::size_t b = 0;
                    while (b + 1 < prev_slice.js.size() && e.col >= prev_slice.offset[b + 1]) ++b;
                    const int j = prev_slice.js[b];
                    const std::size_t local = e.col - prev_slice.offset[b];
                    const std::size_t pos = local / prev_slice.rdim[b], k = local % prev_slice.rdim[b];
                    const std::size_t nb = s.block(j);
                    for (const auto& f : q.left_action(letter, pos, m - 1 - j))
                        t.push_back({Col(s.offset[nb] + f.col * s.rdim[nb] + k), e.val * f.val});
                }
                image.insert(canonicalize(std::move(t)));
            }
        out.source.push_back(s.size);
        out.kernel.push_back(kern.size());
        out.tor3.push_back(kern.size() - image.rank());
        prev_kernel = std::move(kern);
        prev_slice = std::move(s);
    }
    return out;
}

std::vector<std::size_t> tor_bar(PresentedRing& a, int n, int bound) {
    if (n < 1 || n > 4) throw Error(ErrorCode::DomainMismatch, "bar complex supports 1 <= n <= 4");
    const std::size_t g = a.generators();
    (void)g;

    // compositions of m into k positive parts with the size of each tensor block
    struct Block {
        std::vector<int> parts;
        std::size_t offset;
        std::size_t size;
    };
    auto blocks_of = [&](int k, int m, std::size_t& total) {
        std::vector<Block> out;
        total = 0;
        std::vector<int> parts;
        std::function<void(int)> rec = [&](int left) {
            if (int(parts.size()) == k) {
                if (left) return;
                std::size_t size = 1;
                for (int p : parts) size *= a.hilbert(p);
                out.push_back({parts, total, size});
                total += size;
                return;
            }
            for (int p = 1; p <= left - (k - int(parts.size()) - 1); ++p) {
                parts.push_back(p);
                rec(left - p);
                parts.pop_back();
            }
        };
        rec(m);
        return out;
    };

    // rank of d_k : Ω_k(m) → Ω_{k-1}(m)
    auto rank_d = [&](int k, int m) -> std::size_t {
        if (k <= 1 || k > m) return 0;
        std::size_t src_total, dst_total;
        auto src = blocks_of(k, m, src_total);
        auto dst = blocks_of(k - 1, m, dst_total);
        require_columns(std::max(src_total, dst_total), "bar complex strand");
        auto find_dst = [&](const std::vector<int>& parts) -> const Block& {
            for (const auto& b : dst)
                if (b.parts == parts) return b;
            throw Error(ErrorCode::DomainMismatch, "missing bar block");
        };
        Echelon ech(dst_total);
        for (const auto& b : src) {
            std::vector<std::size_t> dims;
            for (int p : b.parts) dims.push_back(a.hilbert(p));
            std::vector<std::size_t> idx(b.parts.size(), 0);
            for (std::size_t flat = 0; flat < b.size; ++flat) {
                // mixed radix, last factor fastest
                std::size_t rem = flat;
                for (std::size_t f = b.parts.size(); f-- > 0;) {
                    idx[f] = rem % dims[f];
                    rem /= dims[f];
                }
                std::vector<Entry> t;
                for (std::size_t i = 0; i + 1 < b.parts.size(); ++i) {
                    Scalar sign((i % 2 == 0) ? 1 : -1);
                    std::vector<int> merged;
                    for (std::size_t f = 0; f < b.parts.size(); ++f) {
                        if (f == i + 1) continue;
                        merged.push_back(f == i ? b.parts[i] + b.parts[i + 1] : b.parts[f]);
                    }
                    const Block& target = find_dst(merged);
                    SparseVec prod = a.multiply(b.parts[i], idx[i], b.parts[i + 1], idx[i + 1]);
                    for (const auto& e : prod) {
                        std::size_t pos = 0;
                        for (std::size_t f = 0, tf = 0; f < b.parts.size(); ++f) {
                            if (f == i + 1) continue;
                            std::size_t dimf = a.hilbert(merged[tf]);
                            std::size_t val = (f == i) ? std::size_t(e.col) : idx[f];
                            pos = pos * dimf + val;
                            ++tf;
                        }
                        t.push_back({Col(target.offset + pos), sign * e.val});
                    }
                }
                ech.insert(canonicalize(std::move(t)));
            }
        }
        return ech.rank();
    };

    std::vector<std::size_t> out;
    for (int m = 0; m <= bound; ++m) {
        if (n > m) {
            out.push_back(0);
            continue;
        }
        std::size_t total;
        blocks_of(n, m, total);
        out.push_back(total - rank_d(n, m) - rank_d(n + 1, m));
    }
    return out;
}

const char* certificate_name(ComplexityCertificate c) {
    switch (c) {
    case ComplexityCertificate::None: return "none";
    case ComplexityCertificate::FreeAlgebra: return "free_algebra";
    case ComplexityCertificate::FiniteDimensional: return "finite_dimensional";
    case ComplexityCertificate::QuadraticPbw: return "quadratic_pbw_basis";
    }
    return "none";
}

bool has_quadratic_pbw_basis(PresentedRing& a) {
    const GradedSubspace& r = a.relations();
    if (r.is_zero() || r.degrees() != std::vector<int>{2}) return false;
    const std::size_t g = a.generators();
    std::vector<bool> leading(g * g, false);
    for (Col p : r.part(2)->pivots()) leading[p] = true;
    std::size_t normal = 0;
    for (std::size_t x = 0; x < g; ++x)
        for (std::size_t y = 0; y < g; ++y)
            for (std::size_t z = 0; z < g; ++z)
                if (!leading[x * g + y] && !leading[y * g + z]) ++normal;
    return normal == a.hilbert(3);
}

Complexity complexity(PresentedRing& a, const ComplexityOptions& opts) {
    Complexity out;
    const GradedSubspace& r = a.relations();
    out.hilbert = a.hilbert_scan(std::max(opts.hilbert_cap, opts.bound));
    int bound = opts.bound;
    if (r.is_zero()) {
        out.certified = true;
        out.certificate = ComplexityCertificate::FreeAlgebra;
    } else if (out.hilbert.finite) {
        bound = out.hilbert.top + 3;
        out.certified = true;
        out.certificate = ComplexityCertificate::FiniteDimensional;
    } else if (opts.quadratic_certificate && has_quadratic_pbw_basis(a)) {
        bound = std::max(bound, 3);
        out.certified = true;
        out.certificate = ComplexityCertificate::QuadraticPbw;
    }
    out.bound = bound;
    out.table = tor3_resolution(a, bound);
    for (int m = 0; m <= bound; ++m)
        if (out.table.tor3[std::size_t(m)]) out.c = m - 1;
    if (out.hilbert.finite && out.c > out.hilbert.top + 2)
        throw Error(ErrorCode::DomainMismatch, "c(A) exceeds c_A + 2");
    if (out.certificate == ComplexityCertificate::QuadraticPbw && !purity_classify(out.table.tor3, 2))
        throw Error(ErrorCode::DomainMismatch, "Tor_3 of a quadratic algebra with a PBW basis is not pure");
    return out;
}

bool purity_classify(const std::vector<std::size_t>& tor3, int N) {
    for (std::size_t m = 0; m < tor3.size(); ++m)
        if (tor3[m] && int(m) != N + 1) return false;
    return true;
}

} // namespace pbwkit
