#pragma once
// Reduced crystallographic root systems in simple-root coordinates, with the
// exact Gram data needed for Weyl-group closure, the Weyl vector, and
// inner products. Everything here is exact rational arithmetic.

#include <string>
#include <vector>

#include "util.hpp"

namespace g2rmt {

enum class RootClass { Short, Long };

struct Root {
  std::vector<Rational> coords;  // simple-root basis
  RootClass cls;
};

using Weight = std::vector<Rational>;  // simple-root basis, rational

struct WeylElement {
  std::vector<std::vector<Rational>> mat;  // acts on coordinate column vectors
  int det = 1;                             // +-1, equals (-1)^length
};

struct RootSystem {
  std::string name;
  int rank = 0;
  std::vector<Root> positive;                 // as listed
  std::vector<Root> roots;                    // positive then negatives
  std::vector<std::vector<Rational>> gram;    // of the simple-root basis
  std::vector<int> simple;                    // indices into positive
  Weight delta;                               // half-sum of positive roots

  Rational inner(const Weight& u, const Weight& v) const;
  Rational norm2(const Weight& v) const { return inner(v, v); }
  Weight reflect_simple(int i, const Weight& v) const;  // i indexes simple[]
};

// the bundled systems
RootSystem build_g2();
RootSystem build_a1();

// Parse + validate a root-system JSON document (schema: name, rank,
// positive_roots[{coords, class}], gram). Throws Error(usage) with a
// pointed message on any axiom violation.
RootSystem load_rootsystem_json(const std::string& json_text);
RootSystem load_rootsystem_file(const std::string& path);

// Closure of the simple reflections; elements carry exact matrices and
// determinant signs. Size is |W| (12 for G2, 2 for A1).
std::vector<WeylElement> weyl_group(const RootSystem& rs);

Weight apply(const WeylElement& w, const Weight& v);

// Weyl dimension formula for the highest weight lambda.
Integer weyl_dimension(const RootSystem& rs, const Weight& lambda);

// G2 fundamental-weight combination n1*w1 + n2*w2 (integer coords).
Weight g2_weight(int n1, int n2);

}  // namespace g2rmt
