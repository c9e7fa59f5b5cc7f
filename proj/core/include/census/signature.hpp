#pragma once

#include <string>
#include <vector>

namespace census {

// Signature (g, k; m_1, ..., m_s) of a 2-orbifold: genus, cusp count and
// cone point orders. Periods are kept sorted so multiset comparison is
// plain equality.
struct Signature {
  int genus = 0;
  int cusps = 0;
  std::vector<int> periods;  // each >= 2, sorted ascending

  Signature() = default;
  Signature(int g, int k, std::vector<int> ms);

  bool operator==(const Signature&) const = default;

  // Text form "g,k;m1,m2,..." (";" alone when there are no periods).
  static Signature parse(const std::string& text);
  std::string str() const;
};

}  // namespace census
