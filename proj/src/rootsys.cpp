#include "rootsys.hpp"

#include <json.hpp>

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace g2rmt {

Rational RootSystem::inner(const Weight& u, const Weight& v) const {
  Rational s = 0;
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) s += u[i] * gram[i][j] * v[j];
  return s;
}

Weight RootSystem::reflect_simple(int i, const Weight& v) const {
  // s_i(v) = v - 2(v, a_i)/(a_i, a_i) * a_i
  const Weight& ai = positive[simple[i]].coords;
  Rational c = 2 * inner(v, ai) / inner(ai, ai);
  Weight out = v;
  for (int k = 0; k < rank; ++k) out[k] -= c * ai[k];
  return out;
}

Weight apply(const WeylElement& w, const Weight& v) {
  int n = (int)w.mat.size();
  Weight out(n, Rational(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i] += w.mat[i][j] * v[j];
  return out;
}

static std::vector<std::vector<Rational>> identity_mat(int n) {
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

static std::vector<std::vector<Rational>> mat_mul(const std::vector<std::vector<Rational>>& a,
                                                  const std::vector<std::vector<Rational>>& b) {
  int n = (int)a.size();
  std::vector<std::vector<Rational>> c(n, std::vector<Rational>(n, Rational(0)));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

static Rational mat_det(std::vector<std::vector<Rational>> m) {
  int n = (int)m.size();
  Rational det = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (m[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != col) {
      std::swap(m[piv], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (int r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rational f = m[r][col] / m[col][col];
      for (int c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det;
}

static std::string mat_key(const std::vector<std::vector<Rational>>& m) {
  std::ostringstream os;
  for (const auto& row : m)
    for (const auto& x : row) os << x.get_str() << ';';
  return os.str();
}

static void finalize(RootSystem& rs) {
  // negatives
  rs.roots = rs.positive;
  for (const Root& r : rs.positive) {
    Root neg = r;
    for (auto& c : neg.coords) c = -c;
    rs.roots.push_back(neg);
  }
  // delta
  rs.delta.assign(rs.rank, Rational(0));
  for (const Root& r : rs.positive)
    for (int i = 0; i < rs.rank; ++i) rs.delta[i] += r.coords[i];
  for (auto& c : rs.delta) c /= 2;
  // simple roots: positive roots that are not sums of two positive roots
  std::set<std::vector<std::string>> pos_keys;
  auto key_of = [&](const Weight& v) {
    std::vector<std::string> k;
    for (const auto& c : v) k.push_back(c.get_str());
    return k;
  };
  for (const Root& r : rs.positive) pos_keys.insert(key_of(r.coords));
  rs.simple.clear();
  for (size_t g = 0; g < rs.positive.size(); ++g) {
    bool decomposable = false;
    for (size_t i = 0; i < rs.positive.size() && !decomposable; ++i)
      for (size_t j = i; j < rs.positive.size() && !decomposable; ++j) {
        Weight s(rs.rank);
        for (int k = 0; k < rs.rank; ++k)
          s[k] = rs.positive[i].coords[k] + rs.positive[j].coords[k];
        if (key_of(s) == key_of(rs.positive[g].coords)) decomposable = true;
      }
    if (!decomposable) rs.simple.push_back((int)g);
  }
}

RootSystem build_g2() {
  RootSystem rs;
  rs.name = "G2";
  rs.rank = 2;
  auto add = [&](int a, int b, RootClass c) {
    rs.positive.push_back({{Rational(a), Rational(b)}, c});
  };
  add(1, 0, RootClass::Short);
  add(0, 1, RootClass::Long);
  add(1, 1, RootClass::Short);
  add(2, 1, RootClass::Short);
  add(3, 1, RootClass::Long);
  add(3, 2, RootClass::Long);
  rs.gram = {{Rational(1), Rational(-3, 2)}, {Rational(-3, 2), Rational(3)}};
  finalize(rs);
  return rs;
}

RootSystem build_a1() {
  RootSystem rs;
  rs.name = "A1";
  rs.rank = 1;
  rs.positive.push_back({{Rational(1)}, RootClass::Short});
  rs.gram = {{Rational(2)}};
  finalize(rs);
  return rs;
}

// ---- JSON loading & validation ----

static Rational rational_from_json_number(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational((long)j.get<long long>());
  // doubles are binary-exact; mpq_set_d converts without rounding
  Rational q;
  mpq_set_d(q.get_mpq_t(), j.get<double>());
  q.canonicalize();
  return q;
}

RootSystem load_rootsystem_json(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const std::exception& e) {
    fail_usage(std::string("root system file: invalid JSON: ") + e.what());
  }
  RootSystem rs;
  try {
    rs.name = j.at("name").get<std::string>();
    rs.rank = j.at("rank").get<int>();
    if (rs.rank < 1 || rs.rank > 8) fail_usage("root system: rank out of range [1,8]");
    for (const auto& jr : j.at("positive_roots")) {
      Root r;
      for (const auto& c : jr.at("coords")) {
        if (!c.is_number_integer())
          fail_usage("root system: root coords must be integers in the simple-root basis");
        r.coords.push_back(Rational((long)c.get<long long>()));
      }
      if ((int)r.coords.size() != rs.rank)
        fail_usage("root system: root coords length != rank");
      std::string cls = jr.at("class").get<std::string>();
      if (cls == "short")
        r.cls = RootClass::Short;
      else if (cls == "long")
        r.cls = RootClass::Long;
      else
        fail_usage("root system: class must be \"short\" or \"long\"");
      rs.positive.push_back(r);
    }
    const auto& jg = j.at("gram");
    for (const auto& row : jg) {
      std::vector<Rational> grow;
      for (const auto& x : row) grow.push_back(rational_from_json_number(x));
      rs.gram.push_back(grow);
    }
  } catch (const Error&) {
    throw;
  } catch (const std::exception& e) {
    fail_usage(std::string("root system file: missing/bad field: ") + e.what());
  }

  if ((int)rs.gram.size() != rs.rank) fail_usage("root system: gram must be rank x rank");
  for (const auto& row : rs.gram)
    if ((int)row.size() != rs.rank) fail_usage("root system: gram must be rank x rank");
  for (int i = 0; i < rs.rank; ++i)
    for (int k = 0; k < rs.rank; ++k)
      if (rs.gram[i][k] != rs.gram[k][i]) fail_usage("root system: gram not symmetric");
  if (rs.positive.empty()) fail_usage("root system: no positive roots listed");

  // signed duplicates: negatives are implied, so a listed v with -v also
  // listed makes the implied full set fail +- closure
  for (size_t i = 0; i < rs.positive.size(); ++i)
    for (size_t k = i + 1; k < rs.positive.size(); ++k) {
      bool eq = true, negeq = true;
      for (int d = 0; d < rs.rank; ++d) {
        if (rs.positive[i].coords[d] != rs.positive[k].coords[d]) eq = false;
        if (rs.positive[i].coords[d] != -rs.positive[k].coords[d]) negeq = false;
      }
      if (eq)
        fail_usage("root system: duplicate root at entries " + std::to_string(i) + "," +
                   std::to_string(k));
      if (negeq)
        fail_usage("root system: not closed under negation (entry " + std::to_string(k) +
                   " is the negative of entry " + std::to_string(i) +
                   "; list each root once, positives only)");
    }

  finalize(rs);

  // positive-definite gram (leading principal minors)
  for (int k = 1; k <= rs.rank; ++k) {
    std::vector<std::vector<Rational>> minor(k, std::vector<Rational>(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) minor[i][j] = rs.gram[i][j];
    if (mat_det(minor) <= 0) fail_usage("root system: gram is not positive definite");
  }

  // length classes must partition by norm
  std::map<int, Rational> class_norm;  // 0 short, 1 long
  for (const Root& r : rs.positive) {
    Rational n2 = rs.norm2(r.coords);
    if (n2 <= 0) fail_usage("root system: root with nonpositive norm");
    int c = r.cls == RootClass::Short ? 0 : 1;
    auto it = class_norm.find(c);
    if (it == class_norm.end())
      class_norm[c] = n2;
    else if (it->second != n2)
      fail_usage("root system: roots of one class have differing lengths");
  }
  if (class_norm.count(0) && class_norm.count(1) && class_norm[0] >= class_norm[1])
    fail_usage("root system: short roots are not shorter than long roots");

  // crystallographic + reflection closure over the full signed set
  std::set<std::vector<std::string>> all;
  auto key_of = [&](const Weight& v) {
    std::vector<std::string> k;
    for (const auto& c : v) k.push_back(c.get_str());
    return k;
  };
  for (const Root& r : rs.roots) all.insert(key_of(r.coords));
  for (const Root& a : rs.roots)
    for (const Root& b : rs.roots) {
      Rational cart = 2 * rs.inner(b.coords, a.coords) / rs.inner(a.coords, a.coords);
      if (cart.get_den() != 1)
        fail_usage("root system: non-integral Cartan number (not crystallographic)");
      Weight img = b.coords;
      for (int k = 0; k < rs.rank; ++k) img[k] -= cart * a.coords[k];
      if (!all.count(key_of(img)))
        fail_usage("root system: not closed under reflection (s_alpha(beta) missing)");
    }

  if ((int)rs.simple.size() != rs.rank)
    fail_usage("root system: listed roots do not form a positive system (" +
               std::to_string(rs.simple.size()) + " simple roots for rank " +
               std::to_string(rs.rank) + ")");
  return rs;
}

RootSystem load_rootsystem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail_usage("root system file not readable: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_rootsystem_json(ss.str());
}

std::vector<WeylElement> weyl_group(const RootSystem& rs) {
  int n = rs.rank;
  // generator matrices: s_i acting on coordinates, M[r][c] = delta - 2 G_{r c}/G_{r r}
  std::vector<WeylElement> gens;
  for (int g = 0; g < (int)rs.simple.size(); ++g) {
    const Weight& ai = rs.positive[rs.simple[g]].coords;
    WeylElement w;
    w.mat = identity_mat(n);
    // column j of s_i is s_i(e_j) = e_j - 2(e_j,a_i)/(a_i,a_i) a_i
    Rational nn = rs.inner(ai, ai);
    for (int j = 0; j < n; ++j) {
      Weight ej(n, Rational(0));
      ej[j] = 1;
      Rational c = 2 * rs.inner(ej, ai) / nn;
      for (int r = 0; r < n; ++r) w.mat[r][j] -= c * ai[r];
    }
    w.det = -1;
    gens.push_back(w);
  }

  std::map<std::string, WeylElement> seen;
  WeylElement id{identity_mat(n), 1};
  seen[mat_key(id.mat)] = id;
  std::vector<WeylElement> frontier{id};
  while (!frontier.empty()) {
    std::vector<WeylElement> next;
    for (const auto& w : frontier)
      for (const auto& g : gens) {
        WeylElement prod{mat_mul(g.mat, w.mat), g.det * w.det};
        auto key = mat_key(prod.mat);
        if (!seen.count(key)) {
          seen[key] = prod;
          next.push_back(prod);
        }
        if (seen.size() > 1000000) fail_cap("weyl group closure exceeded 1e6 elements");
      }
    frontier = std::move(next);
  }
  std::vector<WeylElement> out;
  for (auto& [k, w] : seen) {
    // cross-check the parity sign against the exact determinant
    Rational d = mat_det(w.mat);
    if ((w.det == 1 && d != 1) || (w.det == -1 && d != -1))
      fail_check("weyl element determinant/parity mismatch");
    out.push_back(w);
  }
  return out;
}

Integer weyl_dimension(const RootSystem& rs, const Weight& lambda) {
  Rational num = 1, den = 1;
  Weight ld = lambda;
  for (int i = 0; i < rs.rank; ++i) ld[i] += rs.delta[i];
  for (const Root& a : rs.positive) {
    num *= rs.inner(ld, a.coords);
    den *= rs.inner(rs.delta, a.coords);
  }
  Rational d = num / den;
  if (d.get_den() != 1) fail_check("weyl dimension formula returned a non-integer");
  return d.get_num();
}

Weight g2_weight(int n1, int n2) {
  // fundamental weights in simple-root coords: w1 = (2,1), w2 = (3,2)
  return {Rational(2 * n1 + 3 * n2), Rational(n1 + 2 * n2)};
}

}  // namespace g2rmt
