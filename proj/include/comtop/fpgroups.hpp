#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "comtop/errors.hpp"

namespace comtop {

// A word over group generators: positive entries are generators (1-based),
// negative entries their inverses.
using Word = std::vector<int>;

Word free_reduce(const Word& w);
Word word_inverse(const Word& w);
Word word_pow(const Word& w, int k);

struct FpGroup {
    int ngens = 0;
    std::vector<std::string> names; // size ngens
    std::vector<Word> relators;     // each freely reduced and nonempty
};

std::string word_to_string(const Word& w, const std::vector<std::string>& names);
std::string format_presentation(const FpGroup& g);

// Parses the textual presentation format:
//   gens: a1 a2 t
//   rels: t^2, a1^t*a1, a1*a2*t
// '^' binds to an integer power or to a generator (conjugation x^y = y^-1*x*y),
// '*' concatenates.
FpGroup parse_presentation(const std::string& text);

// coset table for the trivial subgroup: row per coset, columns alternate
// generator / inverse-generator images
struct CosetTable {
    int ngens = 0;
    std::vector<std::vector<int>> row; // row[c][2g] = c.gen, row[c][2g+1] = c.gen^-1

    std::size_t size() const { return row.size(); }
    int act(int coset, int letter) const; // letter as in Word entries
};

struct EnumerationResult {
    std::uint64_t order = 0;
    CosetTable table;
    std::uint64_t cosets_defined = 0; // includes cosets later merged away
};

// Todd-Coxeter coset enumeration over the trivial subgroup. Deterministic:
// relators are scanned at every live coset until stable, then the lowest
// undefined table entry is defined. Coincidences are processed immediately.
// Throws BudgetExceeded if more than max_cosets cosets would be defined.
// See https://en.wikipedia.org/wiki/Todd%E2%80%93Coxeter_algorithm
EnumerationResult todd_coxeter(const FpGroup& g, std::uint64_t max_cosets = 1000000);

// check on the closed table: |G| a power of two, all generator actions
// involutive and pairwise commuting (characterizes (Z/2)^k)
bool is_elementary_abelian_2(const CosetTable& t);

// order of the permutation group generated by the coset actions; closure is
// built explicitly, so this is an independent cross-check of table.size()
std::uint64_t permutation_group_order(const CosetTable& t);

struct Abelianization {
    std::vector<long long> torsion; // invariant factors > 1, divisibility order
    int free_rank = 0;
};

// Smith normal form of the relator exponent matrix
Abelianization abelianization(const FpGroup& g);

// fundamental group of the identity component of commuting n-tuples of
// rotations: <a1..an, t | t^2, [ai,aj] (n>=3), t ai t ai, a1 a2 t>.
// RangeError for n < 2 (the product relator needs two a-generators).
FpGroup presentation_pi1_plus(int n);

// the n=1 analogue <a, t | t^2, tata, at>, obtained by dropping a2
FpGroup presentation_pi1_plus_rank1();

// same space with the base tuple removed: drops the a1 a2 t relator
FpGroup presentation_pi1_punctured(int n); // RangeError n < 2

// quaternion group of order 8
FpGroup presentation_q8();

// <a1..an | [ai,aj]>, the fundamental group of commuting n-tuples of
// unitary 2x2 matrices; infinite, so only abelianization applies
FpGroup presentation_free_abelian(int n);

// Normal form u * t^e in the semidirect product of Z^n by the inverting
// involution (a-generators free for n = 2, free abelian for n >= 3).
// Input word over a1..an (letters 1..n) and t (letter n+1).
Word semidirect_normal_form(const Word& w, int n);

// all words w = u*t, u reduced over a1,a2 with |u| <= L, whose square has
// normal form equal to target (default: the commutator [a1,a2])
std::vector<Word> solve_w_equation(int L, const Word& target = Word{1, 2, -1, -2});

} // namespace comtop
