#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "census/signature.hpp"

namespace census {

// A letter is a signed 1-based generator index: +g is generator g, -g its
// inverse. Words returned by the functions below are freely reduced.
using Letter = int;
using Word = std::vector<Letter>;

Word free_reduce(Word w);
Word cyclic_reduce(Word w);
Word inverse_word(const Word& w);
Word word_power(const Word& w, int k);
Word commutator(const Word& u, const Word& v);
Word concat_words(std::initializer_list<Word> parts);

struct Presentation {
  std::vector<std::string> generator_names;
  std::vector<Word> relators;  // stored freely and cyclically reduced

  Presentation() = default;
  Presentation(std::vector<std::string> names, std::vector<Word> rels);

  int generator_count() const { return static_cast<int>(generator_names.size()); }
};

// Word syntax: generator names, '^' integer powers (negative allowed),
// parentheses, commutators [u,v] = u v u^-1 v^-1, '-' prefix for an
// inverse, juxtaposed single letters with case-swap inverses ("abaB").
// Multi-character names must be separated by spaces or '*'.
Word parse_word(const std::string& text, const std::vector<std::string>& names);
std::string render_word(const Word& w, const std::vector<std::string>& names);

// Text file format: first line `gens: x y z`, then one `rel: <word>` per
// relator. Blank lines and lines starting with '#' are skipped.
Presentation read_presentation(std::istream& in);
Presentation parse_presentation(const std::string& text);
Presentation load_presentation_file(const std::string& path);
std::string format_presentation(const Presentation& P);

// ---- catalog ----

Presentation free_presentation(int rank);
Presentation free_abelian_presentation(int rank);

// Generators ordered (torsion x_1..x_s, cusps p_1..p_k, handles a_1,b_1,..),
// relators x_i^{m_i} plus the long relator  prod x_i  prod p_j  prod [a_l,b_l].
Presentation fuchsian_presentation(const Signature& sig);

// Fundamental groups of spherical 3-manifolds. Tags follow the classification:
//   Q(n):      <x,y | x^2 = (xy)^2 = y^{2n}>,            order 8n, n >= 1
//   P48:       <x,y | x^2 = (xy)^3 = y^4, x^4 = 1>,      order 48
//   P120:      <x,y | x^2 = (xy)^3 = y^5, x^4 = 1>,      order 120
//   D(m,n):    <x,y | x^{2^m}, y^{2n+1}, xyx^-1 = y^-1>, order 2^m(2n+1), m>=2, n>=1
//   Pprime(m): <x,y,z | x^2 = (xy)^2 = y^2, zxz^-1 = y,
//               zyz^-1 = xy, z^{3^m} = 1>,               order 8*3^m, m >= 1
// plus cyclic groups and direct products with a coprime-order cyclic factor.
// Chains a = b = c are split into the pairwise relators ab^-1 and ac^-1.
struct SphericalKind {
  enum class Tag { Trivial, Cyclic, Q, P48, P120, D, Pprime };

  Tag tag = Tag::Trivial;
  std::int64_t a = 0;        // Cyclic: order; Q: n; D: m; Pprime: m
  std::int64_t b = 0;        // D: n
  std::int64_t coprime = 1;  // cyclic direct factor order; 0 or 1 means none

  std::int64_t base_order() const;
  std::int64_t order() const;
  void validate() const;  // throws std::invalid_argument on bad parameters

  // Catalog grammar: Q8n:n | P48 | P120 | D:m,n | Pp:m | cyclic:n | trivial,
  // optionally suffixed with xZ:q for the coprime cyclic factor.
  static SphericalKind parse(const std::string& name);
  std::string name() const;
};

Presentation spherical_presentation(const SphericalKind& kind);

}  // namespace census
