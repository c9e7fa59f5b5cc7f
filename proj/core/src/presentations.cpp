#include "census/presentations.hpp"

#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace census {

Word free_reduce(Word w) {
  Word out;
  out.reserve(w.size());
  for (Letter x : w) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

Word cyclic_reduce(Word w) {
  w = free_reduce(std::move(w));
  size_t i = 0, j = w.size();
  while (j - i >= 2 && w[i] == -w[j - 1]) {
    ++i;
    --j;
  }
  return Word(w.begin() + i, w.begin() + j);
}

Word inverse_word(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

Word word_power(const Word& w, int k) {
  Word base = k < 0 ? inverse_word(w) : w;
  int reps = k < 0 ? -k : k;
  Word out;
  out.reserve(base.size() * reps);
  for (int i = 0; i < reps; ++i) out.insert(out.end(), base.begin(), base.end());
  return free_reduce(std::move(out));
}

Word concat_words(std::initializer_list<Word> parts) {
  Word out;
  for (const Word& p : parts) out.insert(out.end(), p.begin(), p.end());
  return free_reduce(std::move(out));
}

Word commutator(const Word& u, const Word& v) {
  Word out = u;
  out.insert(out.end(), v.begin(), v.end());
  Word ui = inverse_word(u), vi = inverse_word(v);
  out.insert(out.end(), ui.begin(), ui.end());
  out.insert(out.end(), vi.begin(), vi.end());
  return free_reduce(std::move(out));
}

namespace {

bool valid_name(const std::string& s) {
  if (s.empty()) return false;
  if (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_') return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '\'') return false;
  return true;
}

}  // namespace

Presentation::Presentation(std::vector<std::string> names, std::vector<Word> rels)
    : generator_names(std::move(names)) {
  if (generator_names.empty())
    throw std::invalid_argument("presentation needs at least one generator");
  for (size_t i = 0; i < generator_names.size(); ++i) {
    if (!valid_name(generator_names[i]))
      throw std::invalid_argument("bad generator name: '" + generator_names[i] + "'");
    for (size_t j = i + 1; j < generator_names.size(); ++j)
      if (generator_names[i] == generator_names[j])
        throw std::invalid_argument("duplicate generator name: " + generator_names[i]);
  }
  const int g = generator_count();
  relators.reserve(rels.size());
  for (Word& r : rels) {
    for (Letter x : r)
      if (x == 0 || x > g || x < -g)
        throw std::invalid_argument("relator letter out of range");
    Word red = cyclic_reduce(std::move(r));
    if (!red.empty()) relators.push_back(std::move(red));
  }
}

namespace {

// Recursive-descent parser for the word syntax documented in the header.
struct WordParser {
  const std::string& s;
  const std::vector<std::string>& names;
  const std::unordered_map<std::string, int>& index;
  size_t i = 0;

  void skip() {
    while (i < s.size() &&
           (std::isspace(static_cast<unsigned char>(s[i])) || s[i] == '*'))
      ++i;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("word syntax error at position " +
                                std::to_string(i) + ": " + what);
  }

  long long parse_int() {
    skip();
    size_t start = i;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    size_t digits = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == digits) fail("expected integer exponent");
    return std::stoll(s.substr(start, i - start));
  }

  // A run of identifier characters is first matched as a whole name, then
  // letter by letter with case-swap meaning inversion ("abaB").
  Word parse_ident() {
    size_t start = i;
    while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) ||
                            s[i] == '_' || s[i] == '\''))
      ++i;
    std::string run = s.substr(start, i - start);
    if (auto it = index.find(run); it != index.end()) return {it->second};
    Word w;
    for (char c : run) {
      std::string one(1, c);
      if (auto it = index.find(one); it != index.end()) {
        w.push_back(it->second);
        continue;
      }
      char swapped = std::isupper(static_cast<unsigned char>(c))
                         ? static_cast<char>(std::tolower(static_cast<unsigned char>(c)))
                         : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
      if (auto it = index.find(std::string(1, swapped)); it != index.end()) {
        w.push_back(-it->second);
        continue;
      }
      i = start;
      fail("unknown generator name '" + run + "'");
    }
    return w;
  }

  Word parse_atom() {
    skip();
    if (i >= s.size()) fail("expected a word");
    char c = s[i];
    if (c == '-') {
      ++i;
      return inverse_word(parse_atom());
    }
    if (c == '(') {
      ++i;
      Word w = parse_sequence();
      skip();
      if (i >= s.size() || s[i] != ')') fail("expected ')'");
      ++i;
      return w;
    }
    if (c == '[') {
      ++i;
      Word u = parse_sequence();
      skip();
      if (i >= s.size() || s[i] != ',') fail("expected ',' in commutator");
      ++i;
      Word v = parse_sequence();
      skip();
      if (i >= s.size() || s[i] != ']') fail("expected ']'");
      ++i;
      return commutator(u, v);
    }
    if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') return parse_ident();
    fail(std::string("unexpected character '") + c + "'");
  }

  Word parse_term() {
    Word atom = parse_atom();
    skip();
    if (i < s.size() && s[i] == '^') {
      ++i;
      long long k = parse_int();
      if (k < -1000000 || k > 1000000) fail("exponent out of range");
      return word_power(atom, static_cast<int>(k));
    }
    return atom;
  }

  Word parse_sequence() {
    Word w;
    for (;;) {
      skip();
      if (i >= s.size() || s[i] == ')' || s[i] == ']' || s[i] == ',') break;
      Word t = parse_term();
      w.insert(w.end(), t.begin(), t.end());
    }
    return free_reduce(std::move(w));
  }
};

}  // namespace

Word parse_word(const std::string& text, const std::vector<std::string>& names) {
  std::unordered_map<std::string, int> index;
  for (size_t k = 0; k < names.size(); ++k) index[names[k]] = static_cast<int>(k) + 1;
  WordParser p{text, names, index};
  Word w = p.parse_sequence();
  p.skip();
  if (p.i != text.size()) p.fail("trailing input");
  return w;
}

std::string render_word(const Word& w, const std::vector<std::string>& names) {
  if (w.empty()) return "";
  std::string out;
  size_t i = 0;
  while (i < w.size()) {
    size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    long long e = static_cast<long long>(j - i) * (w[i] > 0 ? 1 : -1);
    int g = w[i] > 0 ? w[i] : -w[i];
    if (g > static_cast<int>(names.size())) throw std::invalid_argument("letter out of range");
    if (!out.empty()) out += ' ';
    out += names[g - 1];
    if (e != 1) out += "^" + std::to_string(e);
    i = j;
  }
  return out;
}

Presentation read_presentation(std::istream& in) {
  std::string line;
  std::vector<std::string> names;
  std::vector<std::string> relator_texts;
  bool have_gens = false;
  while (std::getline(in, line)) {
    size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    size_t b = line.find_last_not_of(" \t\r");
    std::string t = line.substr(a, b - a + 1);
    if (t[0] == '#') continue;
    if (t.rfind("gens:", 0) == 0) {
      if (have_gens) throw std::invalid_argument("duplicate gens: line");
      std::istringstream ss(t.substr(5));
      std::string name;
      while (ss >> name) names.push_back(name);
      have_gens = true;
    } else if (t.rfind("rel:", 0) == 0) {
      relator_texts.push_back(t.substr(4));
    } else {
      throw std::invalid_argument("unrecognized line: " + t);
    }
  }
  if (!have_gens) throw std::invalid_argument("missing gens: line");
  std::vector<Word> rels;
  rels.reserve(relator_texts.size());
  for (const std::string& rt : relator_texts) rels.push_back(parse_word(rt, names));
  return Presentation(names, std::move(rels));
}

Presentation parse_presentation(const std::string& text) {
  std::istringstream ss(text);
  return read_presentation(ss);
}

Presentation load_presentation_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open presentation file: " + path);
  return read_presentation(f);
}

std::string format_presentation(const Presentation& P) {
  std::string out = "gens:";
  for (const auto& n : P.generator_names) out += " " + n;
  out += "\n";
  for (const Word& r : P.relators) out += "rel: " + render_word(r, P.generator_names) + "\n";
  return out;
}

// ---- catalog ----

namespace {

std::vector<std::string> numbered(const std::string& stem, int count) {
  std::vector<std::string> v;
  v.reserve(count);
  for (int i = 1; i <= count; ++i) v.push_back(stem + std::to_string(i));
  return v;
}

}  // namespace

Presentation free_presentation(int rank) {
  if (rank < 1) throw std::invalid_argument("free rank must be >= 1");
  return Presentation(numbered("x", rank), {});
}

Presentation free_abelian_presentation(int rank) {
  if (rank < 1) throw std::invalid_argument("rank must be >= 1");
  std::vector<Word> rels;
  for (int i = 1; i <= rank; ++i)
    for (int j = i + 1; j <= rank; ++j) rels.push_back(commutator(Word{i}, Word{j}));
  return Presentation(numbered("e", rank), std::move(rels));
}

Presentation fuchsian_presentation(const Signature& sig) {
  const int s = static_cast<int>(sig.periods.size());
  const int k = sig.cusps;
  const int g = sig.genus;
  std::vector<std::string> names;
  for (int i = 1; i <= s; ++i) names.push_back("x" + std::to_string(i));
  for (int j = 1; j <= k; ++j) names.push_back("p" + std::to_string(j));
  for (int l = 1; l <= g; ++l) {
    names.push_back("a" + std::to_string(l));
    names.push_back("b" + std::to_string(l));
  }
  if (names.empty()) throw std::invalid_argument("empty signature has no presentation");

  std::vector<Word> rels;
  for (int i = 0; i < s; ++i) rels.push_back(word_power(Word{i + 1}, sig.periods[i]));
  Word longrel;
  for (int i = 1; i <= s; ++i) longrel.push_back(i);
  for (int j = 1; j <= k; ++j) longrel.push_back(s + j);
  for (int l = 0; l < g; ++l) {
    Word c = commutator(Word{s + k + 2 * l + 1}, Word{s + k + 2 * l + 2});
    longrel.insert(longrel.end(), c.begin(), c.end());
  }
  rels.push_back(free_reduce(std::move(longrel)));
  return Presentation(std::move(names), std::move(rels));
}

std::int64_t SphericalKind::base_order() const {
  switch (tag) {
    case Tag::Trivial: return 1;
    case Tag::Cyclic: return a;
    case Tag::Q: return 8 * a;
    case Tag::P48: return 48;
    case Tag::P120: return 120;
    case Tag::D: return (std::int64_t{1} << a) * (2 * b + 1);
    case Tag::Pprime: {
      std::int64_t t = 8;
      for (int i = 0; i < a; ++i) t *= 3;
      return t;
    }
  }
  return 0;
}

std::int64_t SphericalKind::order() const {
  return base_order() * (coprime <= 1 ? 1 : coprime);
}

void SphericalKind::validate() const {
  switch (tag) {
    case Tag::Trivial: break;
    case Tag::Cyclic:
      if (a < 1) throw std::invalid_argument("cyclic order must be >= 1");
      break;
    case Tag::Q:
      if (a < 1) throw std::invalid_argument("Q(8n) needs n >= 1");
      break;
    case Tag::P48:
    case Tag::P120: break;
    case Tag::D:
      if (a < 2 || b < 1) throw std::invalid_argument("D(m,n) needs m >= 2, n >= 1");
      break;
    case Tag::Pprime:
      if (a < 1) throw std::invalid_argument("Pprime(m) needs m >= 1");
      break;
  }
  if (coprime < 0) throw std::invalid_argument("coprime factor must be >= 0");
  if (coprime > 1 && std::gcd(coprime, base_order()) != 1)
    throw std::invalid_argument("cyclic factor order not coprime to base order");
}

SphericalKind SphericalKind::parse(const std::string& name) {
  SphericalKind k;
  std::string base = name;
  if (size_t pos = name.rfind("xZ:"); pos != std::string::npos) {
    k.coprime = std::stoll(name.substr(pos + 3));
    base = name.substr(0, pos);
  }
  auto num_after = [&](size_t prefix_len) { return std::stoll(base.substr(prefix_len)); };
  try {
    if (base == "trivial") {
      k.tag = Tag::Trivial;
    } else if (base.rfind("cyclic:", 0) == 0) {
      k.tag = Tag::Cyclic;
      k.a = num_after(7);
    } else if (base.rfind("Q8n:", 0) == 0) {
      k.tag = Tag::Q;
      k.a = num_after(4);
    } else if (base == "P48") {
      k.tag = Tag::P48;
    } else if (base == "P120") {
      k.tag = Tag::P120;
    } else if (base.rfind("D:", 0) == 0) {
      size_t comma = base.find(',', 2);
      if (comma == std::string::npos) throw std::invalid_argument("D:m,n");
      k.tag = Tag::D;
      k.a = std::stoll(base.substr(2, comma - 2));
      k.b = std::stoll(base.substr(comma + 1));
    } else if (base.rfind("Pp:", 0) == 0) {
      k.tag = Tag::Pprime;
      k.a = num_after(3);
    } else {
      throw std::invalid_argument("unknown");
    }
  } catch (const std::exception&) {
    throw std::invalid_argument("bad spherical catalog name: '" + name + "'");
  }
  k.validate();
  return k;
}

std::string SphericalKind::name() const {
  std::string base;
  switch (tag) {
    case Tag::Trivial: base = "trivial"; break;
    case Tag::Cyclic: base = "cyclic:" + std::to_string(a); break;
    case Tag::Q: base = "Q8n:" + std::to_string(a); break;
    case Tag::P48: base = "P48"; break;
    case Tag::P120: base = "P120"; break;
    case Tag::D: base = "D:" + std::to_string(a) + "," + std::to_string(b); break;
    case Tag::Pprime: base = "Pp:" + std::to_string(a); break;
  }
  if (coprime > 1) base += "xZ:" + std::to_string(coprime);
  return base;
}

Presentation spherical_presentation(const SphericalKind& kind) {
  kind.validate();
  std::vector<std::string> names;
  std::vector<Word> rels;
  const Word x{1}, y{2};
  auto xy = free_reduce(Word{1, 2});
  switch (kind.tag) {
    case SphericalKind::Tag::Trivial:
      names = {"x"};
      rels = {Word{1}};
      break;
    case SphericalKind::Tag::Cyclic:
      names = {"x"};
      rels = {word_power(x, static_cast<int>(kind.a))};
      break;
    case SphericalKind::Tag::Q: {
      names = {"x", "y"};
      Word r1 = free_reduce(concat_words({word_power(x, 2), word_power(xy, -2)}));
      Word r2 = free_reduce(concat_words({word_power(x, 2), word_power(y, -2 * static_cast<int>(kind.a))}));
      rels = {r1, r2};
      break;
    }
    case SphericalKind::Tag::P48: {
      names = {"x", "y"};
      rels = {free_reduce(concat_words({word_power(x, 2), word_power(xy, -3)})),
              free_reduce(concat_words({word_power(x, 2), word_power(y, -4)})),
              word_power(x, 4)};
      break;
    }
    case SphericalKind::Tag::P120: {
      names = {"x", "y"};
      rels = {free_reduce(concat_words({word_power(x, 2), word_power(xy, -3)})),
              free_reduce(concat_words({word_power(x, 2), word_power(y, -5)})),
              word_power(x, 4)};
      break;
    }
    case SphericalKind::Tag::D: {
      names = {"x", "y"};
      rels = {word_power(x, static_cast<int>(std::int64_t{1} << kind.a)),
              word_power(y, static_cast<int>(2 * kind.b + 1)),
              free_reduce(Word{1, 2, -1, 2})};
      break;
    }
    case SphericalKind::Tag::Pprime: {
      names = {"x", "y", "z"};
      const Word z{3};
      std::int64_t three_m = 1;
      for (int i = 0; i < kind.a; ++i) three_m *= 3;
      rels = {free_reduce(concat_words({word_power(x, 2), word_power(xy, -2)})),
              free_reduce(concat_words({word_power(x, 2), word_power(y, -2)})),
              free_reduce(Word{3, 1, -3, -2}),
              free_reduce(Word{3, 2, -3, -2, -1}),
              word_power(z, static_cast<int>(three_m))};
      break;
    }
  }
  if (kind.coprime > 1) {
    const int w = static_cast<int>(names.size()) + 1;
    names.push_back("w");
    rels.push_back(word_power(Word{w}, static_cast<int>(kind.coprime)));
    for (int g = 1; g < w; ++g) rels.push_back(commutator(Word{w}, Word{g}));
  }
  return Presentation(std::move(names), std::move(rels));
}

}  // namespace census
