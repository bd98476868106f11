#include "comtop/fpgroups.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace comtop {

Word free_reduce(const Word& w) {
    Word out;
    for (int x : w) {
        if (x == 0) throw RangeError("free_reduce: zero letter");
        if (!out.empty() && out.back() == -x)
            out.pop_back();
        else
            out.push_back(x);
    }
    return out;
}

Word word_inverse(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
    return out;
}

Word word_pow(const Word& w, int k) {
    Word base = k < 0 ? word_inverse(w) : w;
    int reps = std::abs(k);
    Word out;
    for (int i = 0; i < reps; ++i) out.insert(out.end(), base.begin(), base.end());
    return free_reduce(out);
}

std::string word_to_string(const Word& w, const std::vector<std::string>& names) {
    if (w.empty()) return "1";
    std::string s;
    std::size_t i = 0;
    while (i < w.size()) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        int letter = w[i];
        int run = static_cast<int>(j - i);
        int e = letter > 0 ? run : -run;
        int g = std::abs(letter) - 1;
        if (!s.empty()) s += "*";
        s += names[static_cast<std::size_t>(g)];
        if (e != 1) s += "^" + std::to_string(e);
        i = j;
    }
    return s;
}

std::string format_presentation(const FpGroup& g) {
    std::string s = "gens:";
    for (const auto& n : g.names) s += " " + n;
    s += "\nrels: ";
    for (std::size_t i = 0; i < g.relators.size(); ++i) {
        if (i) s += ", ";
        s += word_to_string(g.relators[i], g.names);
    }
    s += "\n";
    return s;
}

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

Word parse_relator(const std::string& text, const std::map<std::string, int>& gen) {
    Word out;
    std::size_t pos = 0;
    auto fail = [&](const char* why) {
        throw std::invalid_argument(std::string("parse_presentation: ") + why + " in '" + text +
                                    "'");
    };
    while (pos < text.size()) {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos >= text.size()) break;
        std::size_t start = pos;
        while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                     text[pos] == '_'))
            ++pos;
        if (pos == start) fail("expected generator name");
        std::string name = text.substr(start, pos - start);
        auto it = gen.find(name);
        if (it == gen.end()) fail("unknown generator");
        Word term{it->second};
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos < text.size() && text[pos] == '^') {
            ++pos;
            while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
            if (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) ||
                                      text[pos] == '-')) {
                std::size_t istart = pos;
                if (text[pos] == '-') ++pos;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
                    ++pos;
                if (pos == istart || (text[istart] == '-' && pos == istart + 1))
                    fail("bad exponent");
                int e = std::stoi(text.substr(istart, pos - istart));
                term = word_pow(term, e);
            } else {
                std::size_t cstart = pos;
                while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) ||
                                             text[pos] == '_'))
                    ++pos;
                if (pos == cstart) fail("bad conjugator");
                auto ct = gen.find(text.substr(cstart, pos - cstart));
                if (ct == gen.end()) fail("unknown conjugator");
                // x^y = y^-1 * x * y
                Word conj{-ct->second};
                conj.insert(conj.end(), term.begin(), term.end());
                conj.push_back(ct->second);
                term = conj;
            }
        }
        out.insert(out.end(), term.begin(), term.end());
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos < text.size()) {
            if (text[pos] != '*') fail("expected '*'");
            ++pos;
        }
    }
    return free_reduce(out);
}

} // namespace

FpGroup parse_presentation(const std::string& text) {
    std::size_t gp = text.find("gens:");
    std::size_t rp = text.find("rels:");
    if (gp == std::string::npos || rp == std::string::npos || rp < gp)
        throw std::invalid_argument("parse_presentation: need 'gens:' then 'rels:'");
    std::string gline = text.substr(gp + 5, text.find('\n', gp) - (gp + 5));
    std::string rblock = text.substr(rp + 5);
    FpGroup g;
    std::map<std::string, int> gen;
    std::istringstream gs(gline);
    std::string name;
    while (gs >> name) {
        if (gen.count(name)) throw std::invalid_argument("parse_presentation: duplicate generator");
        g.names.push_back(name);
        gen[name] = static_cast<int>(g.names.size());
    }
    g.ngens = static_cast<int>(g.names.size());
    if (g.ngens == 0) throw std::invalid_argument("parse_presentation: no generators");
    std::size_t pos = 0;
    while (pos <= rblock.size()) {
        std::size_t comma = rblock.find(',', pos);
        std::string piece =
            trim(comma == std::string::npos ? rblock.substr(pos) : rblock.substr(pos, comma - pos));
        if (!piece.empty() && piece != "1") {
            Word w = parse_relator(piece, gen);
            if (!w.empty()) g.relators.push_back(w);
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return g;
}

int CosetTable::act(int coset, int letter) const {
    int col = letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1;
    return row[static_cast<std::size_t>(coset)][static_cast<std::size_t>(col)];
}

namespace {

// enumeration working state; all reads resolve merged cosets through find()
struct Enumerator {
    int ng;
    const std::vector<Word>& rels;
    std::uint64_t max_cosets;
    std::vector<std::vector<int>> tab;
    std::vector<int> rep;
    std::uint64_t live = 1, defined = 1;

    Enumerator(int ngens, const std::vector<Word>& rs, std::uint64_t mc)
        : ng(ngens), rels(rs), max_cosets(mc) {
        tab.emplace_back(2 * static_cast<std::size_t>(ng), -1);
        rep.push_back(0);
    }

    static int colof(int letter) {
        return letter > 0 ? 2 * (letter - 1) : 2 * (-letter - 1) + 1;
    }

    int find(int c) {
        while (rep[static_cast<std::size_t>(c)] != c) {
            rep[static_cast<std::size_t>(c)] =
                rep[static_cast<std::size_t>(rep[static_cast<std::size_t>(c)])];
            c = rep[static_cast<std::size_t>(c)];
        }
        return c;
    }

    int get(int c, int col) {
        int t = tab[static_cast<std::size_t>(c)][static_cast<std::size_t>(col)];
        if (t < 0) return -1;
        int f = find(t);
        if (f != t) tab[static_cast<std::size_t>(c)][static_cast<std::size_t>(col)] = f;
        return f;
    }

    void coincide(int a, int b) {
        std::vector<std::pair<int, int>> q{{a, b}};
        while (!q.empty()) {
            auto [x, y] = q.back();
            q.pop_back();
            x = find(x);
            y = find(y);
            if (x == y) continue;
            if (x > y) std::swap(x, y);
            rep[static_cast<std::size_t>(y)] = x;
            --live;
            for (int col = 0; col < 2 * ng; ++col) {
                int d = tab[static_cast<std::size_t>(y)][static_cast<std::size_t>(col)];
                if (d < 0) continue;
                tab[static_cast<std::size_t>(y)][static_cast<std::size_t>(col)] = -1;
                d = find(d);
                int cur = get(x, col);
                if (cur < 0) {
                    tab[static_cast<std::size_t>(x)][static_cast<std::size_t>(col)] = d;
                    int mir = get(d, col ^ 1);
                    if (mir < 0)
                        tab[static_cast<std::size_t>(d)][static_cast<std::size_t>(col ^ 1)] = x;
                    else if (mir != x)
                        q.emplace_back(mir, x);
                } else if (cur != d) {
                    q.emplace_back(cur, d);
                }
            }
        }
    }

    // assert c.col = d; true if the table changed
    bool force(int c, int col, int d) {
        c = find(c);
        d = find(d);
        int cur = get(c, col);
        if (cur >= 0) {
            if (cur == d) return false;
            coincide(cur, d);
            return true;
        }
        int mir = get(d, col ^ 1);
        if (mir >= 0 && mir != c) {
            coincide(mir, c);
            return true;
        }
        tab[static_cast<std::size_t>(c)][static_cast<std::size_t>(col)] = d;
        tab[static_cast<std::size_t>(d)][static_cast<std::size_t>(col ^ 1)] = c;
        return true;
    }

    // scan one relator at one coset; applies at most one deduction or
    // coincidence (gaps of length two or more are left for the define step)
    bool scan(int c, const Word& w) {
        c = find(c);
        int f = c;
        std::size_t i = 0;
        while (i < w.size()) {
            int t = get(f, colof(w[i]));
            if (t < 0) break;
            f = t;
            ++i;
        }
        if (i == w.size()) {
            if (f != c) {
                coincide(f, c);
                return true;
            }
            return false;
        }
        int b = c;
        std::size_t j = w.size();
        while (j > i + 1) {
            int t = get(b, colof(-w[j - 1]));
            if (t < 0) break;
            b = t;
            --j;
        }
        if (j == i + 1) return force(f, colof(w[i]), b);
        return false;
    }

    void run() {
        for (;;) {
            bool changed = true;
            while (changed) {
                changed = false;
                for (std::size_t c = 0; c < tab.size(); ++c) {
                    if (find(static_cast<int>(c)) != static_cast<int>(c)) continue;
                    for (const Word& r : rels)
                        if (scan(static_cast<int>(c), r)) changed = true;
                }
            }
            int hc = -1, hcol = -1;
            for (std::size_t c = 0; c < tab.size() && hc < 0; ++c) {
                if (find(static_cast<int>(c)) != static_cast<int>(c)) continue;
                for (int col = 0; col < 2 * ng; ++col)
                    if (get(static_cast<int>(c), col) < 0) {
                        hc = static_cast<int>(c);
                        hcol = col;
                        break;
                    }
            }
            if (hc < 0) return; // closed
            if (defined >= max_cosets)
                throw BudgetExceeded("todd_coxeter: coset budget exhausted");
            int d = static_cast<int>(tab.size());
            tab.emplace_back(2 * static_cast<std::size_t>(ng), -1);
            rep.push_back(d);
            ++defined;
            ++live;
            tab[static_cast<std::size_t>(hc)][static_cast<std::size_t>(hcol)] = d;
            tab[static_cast<std::size_t>(d)][static_cast<std::size_t>(hcol ^ 1)] = hc;
        }
    }

    CosetTable compact() {
        std::vector<int> newid(tab.size(), -1);
        int next = 0;
        for (std::size_t c = 0; c < tab.size(); ++c)
            if (find(static_cast<int>(c)) == static_cast<int>(c))
                newid[c] = next++;
        CosetTable t;
        t.ngens = ng;
        t.row.resize(static_cast<std::size_t>(next));
        for (std::size_t c = 0; c < tab.size(); ++c) {
            if (newid[c] < 0) continue;
            auto& r = t.row[static_cast<std::size_t>(newid[c])];
            r.resize(2 * static_cast<std::size_t>(ng));
            for (int col = 0; col < 2 * ng; ++col) {
                int d = get(static_cast<int>(c), col);
                if (d < 0) throw std::logic_error("todd_coxeter: open entry after closure");
                r[static_cast<std::size_t>(col)] = newid[static_cast<std::size_t>(d)];
            }
        }
        return t;
    }
};

} // namespace

EnumerationResult todd_coxeter(const FpGroup& g, std::uint64_t max_cosets) {
    if (g.ngens < 1) throw RangeError("todd_coxeter: need at least one generator");
    std::vector<Word> rels;
    for (const Word& r : g.relators) {
        Word w = free_reduce(r);
        for (int x : w)
            if (std::abs(x) > g.ngens) throw RangeError("todd_coxeter: letter out of range");
        if (!w.empty()) rels.push_back(w);
    }
    Enumerator e(g.ngens, rels, max_cosets);
    e.run();
    EnumerationResult res;
    res.table = e.compact();
    res.order = e.live;
    res.cosets_defined = e.defined;
    if (res.order != res.table.size()) throw std::logic_error("todd_coxeter: live count mismatch");
    return res;
}

bool is_elementary_abelian_2(const CosetTable& t) {
    std::uint64_t n = t.size();
    if (n == 0 || (n & (n - 1)) != 0) return false;
    int ng = t.ngens;
    for (int g = 1; g <= ng; ++g)
        for (std::size_t c = 0; c < n; ++c)
            if (t.act(t.act(static_cast<int>(c), g), g) != static_cast<int>(c)) return false;
    for (int g = 1; g <= ng; ++g)
        for (int h = g + 1; h <= ng; ++h)
            for (std::size_t c = 0; c < n; ++c)
                if (t.act(t.act(static_cast<int>(c), g), h) !=
                    t.act(t.act(static_cast<int>(c), h), g))
                    return false;
    return true;
}

std::uint64_t permutation_group_order(const CosetTable& t) {
    std::size_t n = t.size();
    std::vector<std::vector<int>> gens;
    for (int g = 1; g <= t.ngens; ++g) {
        std::vector<int> p(n);
        for (std::size_t c = 0; c < n; ++c) p[c] = t.act(static_cast<int>(c), g);
        gens.push_back(std::move(p));
    }
    std::vector<int> id(n);
    std::iota(id.begin(), id.end(), 0);
    std::set<std::vector<int>> seen{id};
    std::vector<std::vector<int>> frontier{id};
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& p : frontier)
            for (const auto& g : gens) {
                std::vector<int> q(n);
                for (std::size_t c = 0; c < n; ++c)
                    q[c] = g[static_cast<std::size_t>(p[c])];
                if (seen.insert(q).second) next.push_back(std::move(q));
            }
        frontier = std::move(next);
    }
    return seen.size();
}

namespace {

// Smith normal form over the integers, in place. Entries stay tiny for the
// presentations in this project; overflow is guarded by the caller's sizes.
std::vector<long long> smith_diagonal(std::vector<std::vector<long long>> m) {
    std::size_t rows = m.size();
    std::size_t cols = rows ? m[0].size() : 0;
    std::vector<long long> diag;
    std::size_t k = 0;
    while (k < rows && k < cols) {
        // locate smallest nonzero entry in the remaining block
        std::size_t pi = rows, pj = cols;
        long long best = 0;
        for (std::size_t i = k; i < rows; ++i)
            for (std::size_t j = k; j < cols; ++j)
                if (m[i][j] != 0 &&
                    (best == 0 || std::llabs(m[i][j]) < std::llabs(best))) {
                    best = m[i][j];
                    pi = i;
                    pj = j;
                }
        if (best == 0) break;
        std::swap(m[k], m[pi]);
        for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][k], m[i][pj]);
        bool clean = true;
        for (std::size_t i = k + 1; i < rows; ++i) {
            if (m[i][k] == 0) continue;
            long long q = m[i][k] / m[k][k];
            for (std::size_t j = k; j < cols; ++j) m[i][j] -= q * m[k][j];
            if (m[i][k] != 0) clean = false;
        }
        for (std::size_t j = k + 1; j < cols; ++j) {
            if (m[k][j] == 0) continue;
            long long q = m[k][j] / m[k][k];
            for (std::size_t i = 0; i < rows; ++i) m[i][j] -= q * m[i][k];
            if (m[k][j] != 0) clean = false;
        }
        if (!clean) continue;
        // enforce the divisibility chain before moving on
        bool fixed = false;
        for (std::size_t i = k + 1; i < rows && !fixed; ++i)
            for (std::size_t j = k + 1; j < cols && !fixed; ++j)
                if (m[i][j] % m[k][k] != 0) {
                    for (std::size_t jj = k; jj < cols; ++jj) m[k][jj] += m[i][jj];
                    fixed = true;
                }
        if (fixed) continue;
        diag.push_back(std::llabs(m[k][k]));
        ++k;
    }
    return diag;
}

} // namespace

Abelianization abelianization(const FpGroup& g) {
    std::size_t ng = static_cast<std::size_t>(g.ngens);
    std::vector<std::vector<long long>> m(ng, std::vector<long long>(g.relators.size(), 0));
    for (std::size_t r = 0; r < g.relators.size(); ++r)
        for (int x : g.relators[r]) {
            std::size_t gi = static_cast<std::size_t>(std::abs(x)) - 1;
            if (gi >= ng) throw RangeError("abelianization: letter out of range");
            m[gi][r] += x > 0 ? 1 : -1;
        }
    std::vector<long long> diag = smith_diagonal(std::move(m));
    Abelianization a;
    int rank = 0;
    for (long long d : diag)
        if (d != 0) {
            ++rank;
            if (d > 1) a.torsion.push_back(d);
        }
    a.free_rank = g.ngens - rank;
    return a;
}

namespace {

Word commutator(int a, int b) { return Word{a, b, -a, -b}; }

} // namespace

FpGroup presentation_pi1_plus(int n) {
    if (n < 2) throw RangeError("presentation_pi1_plus: needs n >= 2");
    FpGroup g;
    g.ngens = n + 1;
    for (int i = 1; i <= n; ++i) g.names.push_back("a" + std::to_string(i));
    g.names.push_back("t");
    int t = n + 1;
    g.relators.push_back(Word{t, t});
    // commutator relators are redundant at n = 2 and omitted there
    if (n >= 3)
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) g.relators.push_back(commutator(i, j));
    for (int i = 1; i <= n; ++i) g.relators.push_back(Word{t, i, t, i});
    g.relators.push_back(Word{1, 2, t});
    return g;
}

FpGroup presentation_pi1_plus_rank1() {
    FpGroup g;
    g.ngens = 2;
    g.names = {"a", "t"};
    g.relators = {Word{2, 2}, Word{2, 1, 2, 1}, Word{1, 2}};
    return g;
}

FpGroup presentation_pi1_punctured(int n) {
    FpGroup g = presentation_pi1_plus(n);
    g.relators.pop_back(); // drop a1 a2 t
    return g;
}

FpGroup presentation_q8() {
    FpGroup g;
    g.ngens = 2;
    g.names = {"x", "y"};
    g.relators = {Word{1, 1, 1, 1}, Word{1, 1, -2, -2}, Word{-2, 1, 2, 1}};
    return g;
}

FpGroup presentation_free_abelian(int n) {
    if (n < 1) throw RangeError("presentation_free_abelian: needs n >= 1");
    FpGroup g;
    g.ngens = n;
    for (int i = 1; i <= n; ++i) g.names.push_back("a" + std::to_string(i));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) g.relators.push_back(commutator(i, j));
    return g;
}

Word semidirect_normal_form(const Word& w, int n) {
    if (n < 1) throw RangeError("semidirect_normal_form: needs n >= 1");
    int t = n + 1;
    bool free_part = n <= 2; // no commutator relators below three a-generators
    Word u;                  // free case
    std::vector<long long> expo(static_cast<std::size_t>(n), 0);
    int e = 0;
    for (int x : w) {
        int g = std::abs(x);
        if (g == 0 || g > t) throw RangeError("semidirect_normal_form: letter out of range");
        if (g == t) {
            e ^= 1;
            continue;
        }
        // pushing a past t^e inverts it e times
        int s = (x > 0 ? 1 : -1) * (e ? -1 : 1);
        if (free_part) {
            int letter = s * g;
            if (!u.empty() && u.back() == -letter)
                u.pop_back();
            else
                u.push_back(letter);
        } else {
            expo[static_cast<std::size_t>(g - 1)] += s;
        }
    }
    Word out;
    if (free_part) {
        out = u;
    } else {
        for (int i = 0; i < n; ++i) {
            long long k = expo[static_cast<std::size_t>(i)];
            for (long long r = 0; r < std::llabs(k); ++r) out.push_back(k > 0 ? i + 1 : -(i + 1));
        }
    }
    if (e) out.push_back(t);
    return out;
}

std::vector<Word> solve_w_equation(int L, const Word& target) {
    if (L < 0) throw RangeError("solve_w_equation: negative length bound");
    Word goal = free_reduce(target);
    std::vector<Word> found;
    Word u;
    // depth-first over reduced words in a1, a2 and their inverses
    auto search = [&](auto&& self, int depth) -> void {
        Word w = u;
        w.push_back(3); // t
        Word sq = w;
        sq.insert(sq.end(), w.begin(), w.end());
        if (semidirect_normal_form(sq, 2) == goal) found.push_back(w);
        if (depth == L) return;
        for (int letter : {1, -1, 2, -2}) {
            if (!u.empty() && u.back() == -letter) continue;
            u.push_back(letter);
            self(self, depth + 1);
            u.pop_back();
        }
    };
    search(search, 0);
    return found;
}

} // namespace comtop
