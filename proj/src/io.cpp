#include "liya/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace liya {

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error("input: " + msg); }

Rational rat(const json& j, const std::string& where) {
  try {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return Rational::parse(j.get<std::string>());
  } catch (const std::exception& e) {
    fail(where + ": " + e.what());
  }
  fail(where + ": expected rational string");
}

int index1(const json& j, int dim, const std::string& where) {
  if (!j.is_number_integer()) fail(where + ": expected 1-based index");
  int v = j.get<int>();
  if (v < 1 || v > dim) {
    std::ostringstream os;
    os << where << ": index " << v << " out of range 1.." << dim;
    fail(os.str());
  }
  return v - 1;
}

Mat matrix(const json& j, int rows, int cols, const std::string& where) {
  if (!j.is_array() || static_cast<int>(j.size()) != rows) fail(where + ": expected " +
                                                                std::to_string(rows) + " rows");
  Mat m(rows, cols);
  for (int r = 0; r < rows; ++r) {
    const json& row = j[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      fail(where + ": expected " + std::to_string(cols) + " columns");
    for (int c = 0; c < cols; ++c)
      m(r, c) = rat(row[static_cast<std::size_t>(c)], where);
  }
  return m;
}

std::vector<std::vector<Rational>> basis_list(const json& j, int dim, const std::string& where) {
  std::vector<std::vector<Rational>> out;
  if (!j.is_array()) fail(where + ": expected array of coordinate vectors");
  for (const auto& row : j) {
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      fail(where + ": expected vectors of length " + std::to_string(dim));
    std::vector<Rational> v;
    for (const auto& x : row) v.push_back(rat(x, where));
    out.push_back(std::move(v));
  }
  return out;
}

// Fills constants listed as [i, j, k, "c"], completing the skew mirror of
// the paired slots: (i, j) when pair_at_front (structure constants), (j, k)
// otherwise (cobracket components). Conflicting explicit mirrors are an
// error when `strict_skew`, and kept as given otherwise.
void fill3(Tensor& t, const json& j, int dim, bool strict_skew, bool pair_at_front,
           const std::string& where) {
  std::vector<bool> given(t.size(), false);
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 4) fail(where + ": expected entries [i, j, k, \"c\"]");
    int i = index1(e[0], dim, where), jj = index1(e[1], dim, where), k = index1(e[2], dim, where);
    Rational c = rat(e[3], where);
    t.at({i, jj, k}) = c;
    given[t.offset({i, jj, k})] = true;
  }
  auto mirror = [&](const Index& idx) {
    Index m = idx;
    if (pair_at_front)
      std::swap(m[0], m[1]);
    else
      std::swap(m[1], m[2]);
    return m;
  };
  t.for_each([&](const Index& i, const Rational&) {
    Index m = mirror(i);
    std::size_t a = t.offset(i), b = t.offset(m);
    if (given[a] && !given[b] && m != i) {
      t.flat(b) = -t.flat(a);
      given[b] = true;
    }
  });
  if (strict_skew)
    t.for_each([&](const Index& i, const Rational& v) {
      if (!(v + t.at(mirror(i))).is_zero())
        fail(where + ": constants are not skew in the paired slots");
    });
}

// Same for [i, j, k, l, "c"] with the skew pair in slots (j, k) when
// `pair_at_front` is false (cobracket omega) or (i, j) when true (ternary
// structure constants).
void fill4(Tensor& t, const json& j, int dim, bool strict_skew, bool pair_at_front,
           const std::string& where) {
  std::vector<bool> given(t.size(), false);
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 5) fail(where + ": expected entries [i, j, k, l, \"c\"]");
    int a = index1(e[0], dim, where), b = index1(e[1], dim, where), c = index1(e[2], dim, where),
        d = index1(e[3], dim, where);
    t.at({a, b, c, d}) = rat(e[4], where);
    given[t.offset({a, b, c, d})] = true;
  }
  auto mirror = [&](const Index& idx) {
    Index m = idx;
    if (pair_at_front)
      std::swap(m[0], m[1]);
    else
      std::swap(m[1], m[2]);
    return m;
  };
  t.for_each([&](const Index& i, const Rational&) {
    Index m = mirror(i);
    std::size_t a = t.offset(i), b = t.offset(m);
    if (given[a] && !given[b] && m != i) {
      t.flat(b) = -t.flat(a);
      given[b] = true;
    }
  });
  if (strict_skew)
    t.for_each([&](const Index& i, const Rational& v) {
      if (!(v + t.at(mirror(i))).is_zero())
        fail(where + ": constants are not skew in the paired slots");
    });
}

LYAlgebra algebra_from(const json& j, const std::string& where) {
  if (!j.contains("dim")) fail(where + ": missing \"dim\"");
  int n = j["dim"].get<int>();
  if (n <= 0) fail(where + ": dim must be positive");
  LYAlgebra g(n);
  if (j.contains("binary")) fill3(g.binary, j["binary"], n, true, true, where + ".binary");
  if (j.contains("ternary")) fill4(g.ternary, j["ternary"], n, true, true, where + ".ternary");
  return g;
}

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(std::string("parse error in '") + path + "': " + e.what());
  }
  return j;
}

LYAlgebra algebra_ref(const json& j, const std::string& dir, const std::string& where) {
  if (j.is_string()) {
    fs::path p = j.get<std::string>();
    if (p.is_relative()) p = fs::path(dir) / p;
    return algebra_from(load_json(p.string()), p.string());
  }
  return algebra_from(j, where);
}

Representation representation_from(const json& j, const std::string& dir) {
  if (!j.contains("algebra")) fail("representation: missing \"algebra\"");
  LYAlgebra g = algebra_ref(j["algebra"], dir, "representation.algebra");
  if (!j.contains("vdim")) fail("representation: missing \"vdim\"");
  int m = j["vdim"].get<int>();
  if (m <= 0) fail("representation: vdim must be positive");
  Representation rep(g, m);
  if (j.contains("rho"))
    for (const auto& e : j["rho"]) {
      if (!e.is_array() || e.size() != 2) fail("representation.rho: expected [i, matrix]");
      int i = index1(e[0], g.dim, "representation.rho");
      rep.rho[i] = matrix(e[1], m, m, "representation.rho");
    }
  if (j.contains("mu"))
    for (const auto& e : j["mu"]) {
      if (!e.is_array() || e.size() != 3) fail("representation.mu: expected [i, j, matrix]");
      int i = index1(e[0], g.dim, "representation.mu");
      int jj = index1(e[1], g.dim, "representation.mu");
      rep.mu[i][jj] = matrix(e[2], m, m, "representation.mu");
    }
  return rep;
}

} // namespace

ParsedInput parse_input_text(const std::string& text, const std::string& dir) {
  json j;
  try {
    j = json::parse(text);
  } catch (const std::exception& e) {
    fail(std::string("parse error: ") + e.what());
  }

  if (j.contains("g1") && j.contains("g2")) {
    LYAlgebra g1 = algebra_ref(j["g1"], dir, "matched-pair.g1");
    LYAlgebra g2 = algebra_ref(j["g2"], dir, "matched-pair.g2");
    MatchedPairData mp(g1, g2);
    auto fill_rho = [&](const char* key, std::vector<Mat>& rho, int nfrom, int nto) {
      if (!j.contains(key)) return;
      for (const auto& e : j[key]) {
        if (!e.is_array() || e.size() != 2) fail(std::string("matched-pair.") + key);
        int i = index1(e[0], nfrom, key);
        rho[i] = matrix(e[1], nto, nto, key);
      }
    };
    auto fill_mu = [&](const char* key, std::vector<std::vector<Mat>>& mu, int nfrom, int nto) {
      if (!j.contains(key)) return;
      for (const auto& e : j[key]) {
        if (!e.is_array() || e.size() != 3) fail(std::string("matched-pair.") + key);
        int a = index1(e[0], nfrom, key), b = index1(e[1], nfrom, key);
        mu[a][b] = matrix(e[2], nto, nto, key);
      }
    };
    fill_rho("rho1", mp.rho1, g1.dim, g2.dim);
    fill_mu("mu1", mp.mu1, g1.dim, g2.dim);
    fill_rho("rho2", mp.rho2, g2.dim, g1.dim);
    fill_mu("mu2", mp.mu2, g2.dim, g1.dim);
    return mp;
  }

  if (j.contains("form")) {
    if (!j.contains("algebra")) fail("quadratic: missing \"algebra\"");
    LYAlgebra g = algebra_ref(j["algebra"], dir, "quadratic.algebra");
    ManinInput out;
    out.quad = QuadraticLY(g, matrix(j["form"], g.dim, g.dim, "quadratic.form"));
    if (j.contains("basis1")) out.basis1 = basis_list(j["basis1"], g.dim, "quadratic.basis1");
    if (j.contains("basis2")) out.basis2 = basis_list(j["basis2"], g.dim, "quadratic.basis2");
    return out;
  }

  if (j.contains("representation")) {
    OperatorInput op;
    const json& rj = j["representation"];
    if (rj.is_string()) {
      fs::path p = rj.get<std::string>();
      if (p.is_relative()) p = fs::path(dir) / p;
      json inner = load_json(p.string());
      op.rep = representation_from(inner, p.parent_path().string());
    } else {
      op.rep = representation_from(rj, dir);
    }
    if (!j.contains("matrix")) fail("operator: missing \"matrix\"");
    op.matrix = matrix(j["matrix"], op.rep.base.dim, op.rep.vdim, "operator.matrix");
    return op;
  }

  if (j.contains("vdim")) return representation_from(j, dir);

  if (j.contains("r")) {
    if (!j.contains("algebra")) fail("two-tensor: missing \"algebra\"");
    LYAlgebra g = algebra_ref(j["algebra"], dir, "two-tensor.algebra");
    return TwoTensor(g, matrix(j["r"], g.dim, g.dim, "two-tensor.r"));
  }

  if (j.contains("delta") || j.contains("omega")) {
    if (!j.contains("algebra")) fail("bialgebra: missing \"algebra\"");
    LYAlgebra g = algebra_ref(j["algebra"], dir, "bialgebra.algebra");
    Cobracket c(g);
    if (j.contains("delta")) fill3(c.delta, j["delta"], g.dim, false, false, "bialgebra.delta");
    if (j.contains("omega")) fill4(c.omega, j["omega"], g.dim, false, false, "bialgebra.omega");
    if (j.contains("splits")) {
      const json& s = j["splits"];
      auto grab3 = [&](const char* key) {
        Tensor t(Index{g.dim, g.dim, g.dim});
        if (s.contains(key)) fill3(t, s[key], g.dim, false, false, std::string("splits.") + key);
        return t;
      };
      auto grab4 = [&](const char* key) {
        Tensor t(Index{g.dim, g.dim, g.dim, g.dim});
        if (s.contains(key)) fill4(t, s[key], g.dim, false, false, std::string("splits.") + key);
        return t;
      };
      c.delta1 = grab3("delta1");
      c.delta2 = grab3("delta2");
      c.omega1 = grab4("omega1");
      c.omega2 = grab4("omega2");
      c.omega3 = grab4("omega3");
    }
    return c;
  }

  if (j.contains("star") || j.contains("triple")) {
    if (!j.contains("dim")) fail("pre-ly: missing \"dim\"");
    int n = j["dim"].get<int>();
    if (n <= 0) fail("pre-ly: dim must be positive");
    PreLYAlgebra a(n);
    // no symmetry assumed: entries are taken literally
    if (j.contains("star"))
      for (const auto& e : j["star"]) {
        if (!e.is_array() || e.size() != 4) fail("pre-ly.star: expected [i, j, k, \"c\"]");
        a.star.at({index1(e[0], n, "star"), index1(e[1], n, "star"), index1(e[2], n, "star")}) =
            rat(e[3], "pre-ly.star");
      }
    if (j.contains("triple"))
      for (const auto& e : j["triple"]) {
        if (!e.is_array() || e.size() != 5) fail("pre-ly.triple: expected [i, j, k, l, \"c\"]");
        a.triple.at({index1(e[0], n, "triple"), index1(e[1], n, "triple"),
                     index1(e[2], n, "triple"), index1(e[3], n, "triple")}) =
            rat(e[4], "pre-ly.triple");
      }
    return a;
  }

  if (j.contains("dim")) return algebra_from(j, "algebra");
  fail("unrecognized input schema");
}

ParsedInput parse_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_input_text(ss.str(), fs::path(path).parent_path().string());
}

std::string kind_of(const ParsedInput& p) {
  struct Visitor {
    std::string operator()(const LYAlgebra&) const { return "algebra"; }
    std::string operator()(const Representation&) const { return "representation"; }
    std::string operator()(const TwoTensor&) const { return "two-tensor"; }
    std::string operator()(const Cobracket&) const { return "bialgebra"; }
    std::string operator()(const PreLYAlgebra&) const { return "pre-ly"; }
    std::string operator()(const OperatorInput&) const { return "operator"; }
    std::string operator()(const MatchedPairData&) const { return "matched-pair"; }
    std::string operator()(const ManinInput&) const { return "quadratic"; }
  };
  return std::visit(Visitor{}, p);
}

namespace {

json entries3(const Tensor& t) {
  json out = json::array();
  t.for_each([&](const Index& i, const Rational& v) {
    if (!v.is_zero()) out.push_back({i[0] + 1, i[1] + 1, i[2] + 1, v.str()});
  });
  return out;
}

json entries4(const Tensor& t) {
  json out = json::array();
  t.for_each([&](const Index& i, const Rational& v) {
    if (!v.is_zero()) out.push_back({i[0] + 1, i[1] + 1, i[2] + 1, i[3] + 1, v.str()});
  });
  return out;
}

json matrix_json(const Mat& m) {
  json out = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c).str());
    out.push_back(std::move(row));
  }
  return out;
}

json algebra_json(const LYAlgebra& g) {
  nlohmann::ordered_json j;
  j["dim"] = g.dim;
  j["binary"] = entries3(g.binary);
  j["ternary"] = entries4(g.ternary);
  return j;
}

} // namespace

std::string serialize(const LYAlgebra& alg, const std::string& description) {
  nlohmann::ordered_json j;
  if (!description.empty()) j["description"] = description;
  j["dim"] = alg.dim;
  j["binary"] = entries3(alg.binary);
  j["ternary"] = entries4(alg.ternary);
  return j.dump(2) + "\n";
}

std::string serialize(const TwoTensor& r, const std::string& description) {
  nlohmann::ordered_json j;
  if (!description.empty()) j["description"] = description;
  j["algebra"] = algebra_json(r.alg);
  j["r"] = matrix_json(r.coeffs);
  return j.dump(2) + "\n";
}

std::string serialize(const Cobracket& c, const std::string& description) {
  nlohmann::ordered_json j;
  if (!description.empty()) j["description"] = description;
  j["algebra"] = algebra_json(c.alg);
  j["delta"] = entries3(c.delta);
  j["omega"] = entries4(c.omega);
  if (c.has_splits()) {
    nlohmann::ordered_json s;
    s["delta1"] = entries3(*c.delta1);
    s["delta2"] = entries3(*c.delta2);
    s["omega1"] = entries4(*c.omega1);
    s["omega2"] = entries4(*c.omega2);
    s["omega3"] = entries4(*c.omega3);
    j["splits"] = std::move(s);
  }
  return j.dump(2) + "\n";
}

std::string serialize(const PreLYAlgebra& a, const std::string& description) {
  nlohmann::ordered_json j;
  if (!description.empty()) j["description"] = description;
  j["dim"] = a.dim;
  j["star"] = entries3(a.star);
  j["triple"] = entries4(a.triple);
  return j.dump(2) + "\n";
}

std::string serialize(const ManinInput& m, const std::string& description) {
  nlohmann::ordered_json j;
  if (!description.empty()) j["description"] = description;
  j["algebra"] = algebra_json(m.quad.alg);
  j["form"] = matrix_json(m.quad.form);
  auto basis_json = [](const std::vector<std::vector<Rational>>& basis) {
    json out = json::array();
    for (const auto& v : basis) {
      json row = json::array();
      for (const auto& x : v) row.push_back(x.str());
      out.push_back(std::move(row));
    }
    return out;
  };
  j["basis1"] = basis_json(m.basis1);
  j["basis2"] = basis_json(m.basis2);
  return j.dump(2) + "\n";
}

} // namespace liya
