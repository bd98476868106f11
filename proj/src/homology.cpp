#include "comtop/homology.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>
#include <stdexcept>

namespace comtop {

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

std::size_t F2CellComplex::total_cells() const {
    std::size_t t = 0;
    for (int d = 0; d <= dim(); ++d) t += cells(d);
    return t;
}

std::size_t f2_rank(std::vector<std::vector<std::uint64_t>> rows, std::size_t ncols) {
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
        std::size_t w = col >> 6;
        std::uint64_t bit = std::uint64_t(1) << (col & 63);
        std::size_t pivot = rows.size();
        for (std::size_t r = rank; r < rows.size(); ++r)
            if (rows[r][w] & bit) {
                pivot = r;
                break;
            }
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || !(rows[r][w] & bit)) continue;
            for (std::size_t ww = 0; ww < rows[r].size(); ++ww) rows[r][ww] ^= rows[rank][ww];
        }
        ++rank;
    }
    return rank;
}

namespace {

// Cell codes for the sphere-times-torus model. Sphere part s in 0..5:
// v+, v-, a+, a-, f+, f- (two antipodal cells per dimension). Each circle
// factor holds a base-4 digit: 0 = P (the point 1), 1 = M (the point -1),
// 2 = U, 3 = L (the conjugation-swapped arcs, both oriented P -> M).
// A product cell is s * 4^n + config; the diagonal involution sends s to
// s^1 and swaps U/L digits, so orbit representatives are the even-s cells.
struct Model {
    int n;
    std::uint64_t p4; // 4^n

    explicit Model(int nn) : n(nn), p4(std::uint64_t(1) << (2 * nn)) {}

    static int sdim(int s) { return s >> 1; }
    int digit(std::uint64_t cfg, int i) const { return static_cast<int>((cfg >> (2 * i)) & 3); }
    std::uint64_t with_digit(std::uint64_t cfg, int i, int d) const {
        return (cfg & ~(std::uint64_t(3) << (2 * i))) | (std::uint64_t(d) << (2 * i));
    }
    std::uint64_t conj(std::uint64_t cfg) const {
        std::uint64_t out = cfg;
        for (int i = 0; i < n; ++i) {
            int d = digit(cfg, i);
            if (d >= 2) out = with_digit(out, i, d ^ 1);
        }
        return out;
    }
    int edges_in(std::uint64_t cfg) const {
        int k = 0;
        for (int i = 0; i < n; ++i) k += digit(cfg, i) >= 2;
        return k;
    }
    int pdim(int s, std::uint64_t cfg) const { return sdim(s) + edges_in(cfg); }

    std::uint64_t pcode(int s, std::uint64_t cfg) const { return std::uint64_t(s) * p4 + cfg; }
    std::uint64_t qcode(int srep, std::uint64_t cfg) const {
        return std::uint64_t(srep) * p4 + cfg;
    }

    // boundary cells of a product cell, one entry per incidence
    void product_boundary(int s, std::uint64_t cfg,
                          std::vector<std::pair<int, std::uint64_t>>& out) const {
        out.clear();
        if (s == 2 || s == 3) {
            out.push_back({0, cfg});
            out.push_back({1, cfg});
        } else if (s == 4 || s == 5) {
            out.push_back({2, cfg});
            out.push_back({3, cfg});
        }
        for (int i = 0; i < n; ++i)
            if (digit(cfg, i) >= 2) {
                out.push_back({s, with_digit(cfg, i, 0)});
                out.push_back({s, with_digit(cfg, i, 1)});
            }
    }

    // orbit representative in the quotient, as (srep in 0..2, config)
    std::pair<int, std::uint64_t> orbit_rep(int s, std::uint64_t cfg) const {
        if (s & 1) return {(s ^ 1) >> 1, conj(cfg)};
        return {s >> 1, cfg};
    }

    // quotient boundary with incidences accumulated mod 2, sorted
    void quotient_boundary(int srep, std::uint64_t cfg, std::vector<std::uint64_t>& out,
                           std::vector<std::pair<int, std::uint64_t>>& scratch) const {
        product_boundary(2 * srep, cfg, scratch);
        out.clear();
        for (const auto& [s2, c2] : scratch) {
            auto [r, c] = orbit_rep(s2, c2);
            out.push_back(qcode(r, c));
        }
        std::sort(out.begin(), out.end());
        std::size_t w = 0;
        for (std::size_t i = 0; i < out.size();) {
            std::size_t j = i;
            while (j < out.size() && out[j] == out[i]) ++j;
            if ((j - i) & 1) out[w++] = out[i];
            i = j;
        }
        out.resize(w);
    }

    std::string label(int srep, std::uint64_t cfg) const {
        static const char* sc = "vaf";
        static const char* cc = "PMUL";
        std::string l(1, sc[srep]);
        for (int i = 0; i < n; ++i) l += cc[digit(cfg, i)];
        return l;
    }
};

// parity check that boundary-of-boundary vanishes, using a flat scratch array
// indexed by cell code
template <class BoundaryFn>
void check_dd(std::uint64_t ncodes, BoundaryFn&& bnd_of,
              const std::vector<std::uint64_t>& codes, const char* stage) {
    std::vector<std::uint8_t> parity(ncodes, 0);
    std::vector<std::uint64_t> touched;
    std::vector<std::uint64_t> b1, b2;
    for (std::uint64_t code : codes) {
        bnd_of(code, b1);
        touched.clear();
        for (std::uint64_t mid : b1) {
            bnd_of(mid, b2);
            for (std::uint64_t low : b2) {
                parity[low] ^= 1;
                touched.push_back(low);
            }
        }
        for (std::uint64_t low : touched)
            if (parity[low]) {
                parity[low] = 0; // reset for a clean error path
                throw BoundaryError(std::string("build_plus_model: boundary^2 != 0 at stage ") +
                                    stage);
            }
    }
}

} // namespace

F2CellComplex build_plus_model(int n) {
    if (n < 1 || n > 8) throw BoundError("build_plus_model: supported range is 1 <= n <= 8");
    Model md(n);
    const std::uint64_t p4 = md.p4;

    // stage 1: product complex
    {
        std::vector<std::uint64_t> codes;
        codes.reserve(6 * p4);
        for (int s = 0; s < 6; ++s)
            for (std::uint64_t cfg = 0; cfg < p4; ++cfg)
                if (md.pdim(s, cfg) >= 2) codes.push_back(md.pcode(s, cfg));
        std::vector<std::pair<int, std::uint64_t>> scratch;
        auto bnd = [&](std::uint64_t code, std::vector<std::uint64_t>& out) {
            int s = static_cast<int>(code / p4);
            std::uint64_t cfg = code % p4;
            md.product_boundary(s, cfg, scratch);
            out.clear();
            for (const auto& [s2, c2] : scratch) out.push_back(md.pcode(s2, c2));
        };
        check_dd(6 * p4, bnd, codes, "product");
    }

    // stage 2: free quotient (3 * 4^n cells)
    {
        std::vector<std::uint64_t> codes;
        codes.reserve(3 * p4);
        for (int srep = 0; srep < 3; ++srep)
            for (std::uint64_t cfg = 0; cfg < p4; ++cfg)
                if (srep + md.edges_in(cfg) >= 2) codes.push_back(md.qcode(srep, cfg));
        std::vector<std::pair<int, std::uint64_t>> scratch;
        auto bnd = [&](std::uint64_t code, std::vector<std::uint64_t>& out) {
            md.quotient_boundary(static_cast<int>(code / p4), code % p4, out, scratch);
        };
        check_dd(3 * p4, bnd, codes, "quotient");
    }

    // stage 3: collapse the projective-plane subcomplex over the trivial
    // torus point. Its vertex survives as the basepoint; its edge and face
    // are removed and all incidences to them dropped.
    const std::uint64_t a_edge = md.qcode(1, 0);
    const std::uint64_t a_face = md.qcode(2, 0);

    F2CellComplex k;
    k.n = n;
    int top = n + 2;
    k.bnd.assign(static_cast<std::size_t>(top) + 1, {});
    k.label.assign(static_cast<std::size_t>(top) + 1, {});

    std::vector<std::uint32_t> fidx(3 * p4, UINT32_MAX);
    std::vector<std::uint8_t> fdim(3 * p4, 0);
    for (int srep = 0; srep < 3; ++srep)
        for (std::uint64_t cfg = 0; cfg < p4; ++cfg) {
            std::uint64_t code = md.qcode(srep, cfg);
            if (code == a_edge || code == a_face) continue;
            int d = srep + md.edges_in(cfg);
            fidx[code] = static_cast<std::uint32_t>(k.label[static_cast<std::size_t>(d)].size());
            fdim[code] = static_cast<std::uint8_t>(d);
            k.label[static_cast<std::size_t>(d)].push_back(md.label(srep, cfg));
        }
    k.basepoint = fidx[md.qcode(0, 0)];

    for (std::size_t d = 0; d <= static_cast<std::size_t>(top); ++d)
        k.bnd[d].resize(k.label[d].size());

    std::vector<std::uint64_t> qb;
    std::vector<std::pair<int, std::uint64_t>> scratch;
    for (int srep = 0; srep < 3; ++srep)
        for (std::uint64_t cfg = 0; cfg < p4; ++cfg) {
            std::uint64_t code = md.qcode(srep, cfg);
            if (fidx[code] == UINT32_MAX) continue;
            int d = srep + md.edges_in(cfg);
            if (d == 0) continue;
            md.quotient_boundary(srep, cfg, qb, scratch);
            auto& row = k.bnd[static_cast<std::size_t>(d)][fidx[code]];
            for (std::uint64_t low : qb) {
                if (low == a_edge || low == a_face) continue;
                row.push_back(fidx[low]);
            }
            std::sort(row.begin(), row.end());
        }

    // boundary-of-boundary on the collapsed complex
    for (int d = 2; d <= top; ++d) {
        std::vector<std::uint8_t> parity(k.cells(d - 2), 0);
        std::vector<std::uint32_t> touched;
        for (const auto& row : k.bnd[static_cast<std::size_t>(d)]) {
            touched.clear();
            for (std::uint32_t mid : row)
                for (std::uint32_t low : k.bnd[static_cast<std::size_t>(d) - 1][mid]) {
                    parity[low] ^= 1;
                    touched.push_back(low);
                }
            for (std::uint32_t low : touched)
                if (parity[low])
                    throw BoundaryError("build_plus_model: boundary^2 != 0 after collapse");
        }
    }

    // endpoints of the surviving edges; representative edges have sphere
    // part v+ (one arc digit) or a+ (all digits at vertices)
    k.ends.resize(k.cells(1));
    for (int srep = 0; srep < 3; ++srep)
        for (std::uint64_t cfg = 0; cfg < p4; ++cfg) {
            std::uint64_t code = md.qcode(srep, cfg);
            if (fidx[code] == UINT32_MAX || fdim[code] != 1) continue;
            std::uint32_t start, end;
            if (srep == 1) {
                auto [r0, c0] = md.orbit_rep(0, cfg);
                auto [r1, c1] = md.orbit_rep(1, cfg);
                start = fidx[md.qcode(r0, c0)];
                end = fidx[md.qcode(r1, c1)];
            } else {
                int i = 0;
                while (md.digit(cfg, i) < 2) ++i;
                start = fidx[md.qcode(0, md.with_digit(cfg, i, 0))];
                end = fidx[md.qcode(0, md.with_digit(cfg, i, 1))];
            }
            k.ends[fidx[code]] = {start, end};
        }

    if (n <= 3) {
        k.attaching_recorded = true;
        k.attach2.resize(k.cells(2));
        // descend a product-level letter to the final complex; the involution
        // reverses the sphere arcs and preserves the circle arcs
        auto put = [&](std::vector<std::pair<std::uint32_t, std::int8_t>>& word, int s,
                       std::uint64_t cfg, int sign) {
            int tsign = 1;
            if (s & 1) {
                if (s == 3) tsign = -1;
                auto [r, c] = md.orbit_rep(s, cfg);
                s = 2 * r;
                cfg = c;
            }
            std::uint64_t q = md.qcode(s >> 1, cfg);
            if (q == a_edge) return;
            word.push_back({fidx[q], static_cast<std::int8_t>(sign * tsign)});
        };
        for (int srep = 0; srep < 3; ++srep)
            for (std::uint64_t cfg = 0; cfg < p4; ++cfg) {
                std::uint64_t code = md.qcode(srep, cfg);
                if (fidx[code] == UINT32_MAX || fdim[code] != 2) continue;
                auto& word = k.attach2[fidx[code]];
                if (srep == 2) {
                    // hemisphere: boundary loop runs along one arc and back
                    // down the antipodal one
                    put(word, 2, cfg, +1);
                    put(word, 3, cfg, -1);
                } else if (srep == 1) {
                    int i = 0;
                    while (md.digit(cfg, i) < 2) ++i;
                    put(word, 2, md.with_digit(cfg, i, 0), +1);
                    put(word, 1, cfg, +1);
                    put(word, 2, md.with_digit(cfg, i, 1), -1);
                    put(word, 0, cfg, -1);
                } else {
                    int i = 0;
                    while (md.digit(cfg, i) < 2) ++i;
                    int j = i + 1;
                    while (md.digit(cfg, j) < 2) ++j;
                    put(word, 0, md.with_digit(cfg, j, 0), +1);
                    put(word, 0, md.with_digit(cfg, i, 1), +1);
                    put(word, 0, md.with_digit(cfg, j, 1), -1);
                    put(word, 0, md.with_digit(cfg, i, 0), -1);
                }
            }
        // attaching words must reproduce the mod-2 boundary rows
        for (std::size_t c = 0; c < k.cells(2); ++c) {
            std::vector<std::uint32_t> check;
            for (const auto& [e, sgn] : k.attach2[c]) check.push_back(e);
            std::sort(check.begin(), check.end());
            std::vector<std::uint32_t> odd;
            for (std::size_t i = 0; i < check.size();) {
                std::size_t j = i;
                while (j < check.size() && check[j] == check[i]) ++j;
                if ((j - i) & 1) odd.push_back(check[i]);
                i = j;
            }
            if (odd != k.bnd[2][c])
                throw BoundaryError("build_plus_model: attaching words disagree with boundaries");
        }
    }
    return k;
}

BettiProfile betti_f2(const F2CellComplex& k) {
    int top = k.dim();
    for (int d = 2; d <= top; ++d) {
        std::vector<std::uint8_t> parity(k.cells(d - 2), 0);
        std::vector<std::uint32_t> touched;
        for (const auto& row : k.bnd[static_cast<std::size_t>(d)]) {
            touched.clear();
            for (std::uint32_t mid : row)
                for (std::uint32_t low : k.bnd[static_cast<std::size_t>(d) - 1][mid]) {
                    parity[low] ^= 1;
                    touched.push_back(low);
                }
            bool bad = false;
            for (std::uint32_t low : touched) {
                if (parity[low]) bad = true;
                parity[low] = 0;
            }
            if (bad) throw BoundaryError("betti_f2: boundary^2 != 0");
        }
    }
    std::vector<std::size_t> rank(static_cast<std::size_t>(top) + 2, 0);
    for (int d = 1; d <= top; ++d) {
        std::size_t ncols = k.cells(d - 1);
        std::size_t words = (ncols + 63) / 64;
        std::vector<std::vector<std::uint64_t>> rows(k.cells(d),
                                                     std::vector<std::uint64_t>(words, 0));
        for (std::size_t c = 0; c < k.cells(d); ++c)
            for (std::uint32_t low : k.bnd[static_cast<std::size_t>(d)][c])
                rows[c][low >> 6] ^= std::uint64_t(1) << (low & 63);
        rank[static_cast<std::size_t>(d)] = f2_rank(std::move(rows), ncols);
    }
    BettiProfile p;
    p.n = k.n;
    for (int d = 0; d <= top; ++d)
        p.b.push_back(static_cast<long long>(k.cells(d)) -
                      static_cast<long long>(rank[static_cast<std::size_t>(d)]) -
                      static_cast<long long>(rank[static_cast<std::size_t>(d) + 1]));
    return p;
}

BettiProfile betti_formula(int n) {
    if (n < 2) throw RangeError("betti_formula: table starts at n = 2");
    BettiProfile p;
    p.n = n;
    p.b.assign(static_cast<std::size_t>(n) + 3, 0);
    p.b[0] = 1;
    p.b[1] = n;
    p.b[2] = binomial(n, 1) + binomial(n, 2);
    for (int q = 3; q <= n; ++q)
        p.b[static_cast<std::size_t>(q)] =
            binomial(n, q - 2) + binomial(n, q - 1) + binomial(n, q);
    p.b[static_cast<std::size_t>(n) + 1] = binomial(n, n - 1) + 1;
    p.b[static_cast<std::size_t>(n) + 2] = 1;
    return p;
}

long long euler_from_betti(const BettiProfile& p) {
    long long chi = 0;
    int sign = 1;
    for (long long b : p.b) {
        chi += sign * b;
        sign = -sign;
    }
    return chi;
}

long long euler_from_cells(const F2CellComplex& k) {
    long long chi = 0;
    int sign = 1;
    for (int d = 0; d <= k.dim(); ++d) {
        chi += sign * static_cast<long long>(k.cells(d));
        sign = -sign;
    }
    return chi;
}

long long euler_binomial_even(int n) {
    if (n < 4 || n % 2 != 0)
        throw RangeError("euler_binomial_even: defined for even n >= 4");
    int k = n / 2;
    return 2 + static_cast<long long>(n) * (n - 1) - binomial(n, k - 1) - binomial(n, k) -
           binomial(n, k + 1);
}

FpGroup edge_path_pi1(const F2CellComplex& k) {
    if (!k.attaching_recorded)
        throw MissingAttachingWords("edge_path_pi1: complex built without attaching words");
    std::size_t nv = k.cells(0), ne = k.cells(1);

    // spanning tree by breadth-first search from the basepoint
    std::vector<int> tree_edge(ne, 0);
    std::vector<std::uint8_t> seen(nv, 0);
    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> adj(nv);
    for (std::uint32_t e = 0; e < ne; ++e) {
        auto [a, b] = k.ends[e];
        if (a == b) continue;
        adj[a].push_back({b, e});
        adj[b].push_back({a, e});
    }
    std::queue<std::uint32_t> bfs;
    bfs.push(k.basepoint);
    seen[k.basepoint] = 1;
    while (!bfs.empty()) {
        std::uint32_t v = bfs.front();
        bfs.pop();
        for (auto [w, e] : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                tree_edge[e] = 1;
                bfs.push(w);
            }
    }
    for (std::size_t v = 0; v < nv; ++v)
        if (!seen[v]) throw std::logic_error("edge_path_pi1: 1-skeleton not connected");

    FpGroup g;
    std::vector<int> gen_of(ne, 0);
    for (std::uint32_t e = 0; e < ne; ++e)
        if (!tree_edge[e]) {
            g.names.push_back(k.label[1][e]);
            gen_of[e] = static_cast<int>(g.names.size());
        }
    g.ngens = static_cast<int>(g.names.size());
    for (const auto& word : k.attach2) {
        Word r;
        for (const auto& [e, sgn] : word) {
            if (tree_edge[e]) continue;
            r.push_back(sgn > 0 ? gen_of[e] : -gen_of[e]);
        }
        r = free_reduce(r);
        if (!r.empty()) g.relators.push_back(r);
    }
    if (g.ngens == 0) {
        g.ngens = 1;
        g.names = {"g1"};
        g.relators = {Word{1}};
    }
    return g;
}

} // namespace comtop
