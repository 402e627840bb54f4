#include "hilbfock/surface.hpp"

#include <fstream>
#include <sstream>

namespace hilbfock {

std::string SurfaceDatum::basis_name(int idx) const {
  if (idx == 0) return "1";
  if (idx == c_index) return "c";
  if (idx <= picard_rank) return picard_rank == 1 ? "l" : "l" + std::to_string(idx);
  return "tau" + std::to_string(idx - picard_rank);
}

int SurfaceDatum::basis_index(const std::string& name) const {
  if (name == "1") return 0;
  if (name == "c") return c_index;
  if (name == "l") return picard_rank >= 1 ? 1 : -1;
  if (name.rfind("l", 0) == 0 && name.size() > 1) {
    int k = atoi(name.c_str() + 1);
    return (k >= 1 && k <= picard_rank) ? k : -1;
  }
  if (name.rfind("tau", 0) == 0 && name.size() > 3) {
    int k = atoi(name.c_str() + 3);
    if (mode != SurfaceMode::Split) return -1;
    return (k >= 1 && k <= b) ? picard_rank + k : -1;
  }
  return -1;
}

Rat SurfaceDatum::pair(const SurfClass& x, const SurfClass& y) const {
  Rat r(0);
  for (int i = 0; i < dim; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim; ++j)
      if (!y[j].is_zero()) r += x[i] * y[j] * pairing_[i][j];
  }
  return r;
}

SurfClass SurfaceDatum::mul(const SurfClass& x, const SurfClass& y) const {
  SurfClass r = zero_class();
  for (int i = 0; i < dim; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim; ++j) {
      if (y[j].is_zero()) continue;
      int g = grade(i) + grade(j);
      if (g > 2) continue;
      if (grade(i) == 0)
        r[j] += x[i] * y[j];
      else if (grade(j) == 0)
        r[i] += x[i] * y[j];
      else  // two grade-1 classes multiply into the point class
        r[c_index] += x[i] * y[j] * mul_point_coeff(i, j);
    }
  }
  return r;
}

SurfClass SurfaceDatum::basis_class(int idx) const {
  SurfClass r = zero_class();
  r[idx] = Rat(1);
  return r;
}

SurfClass SurfaceDatum::t_class() const {
  SurfClass r = zero_class();
  for (int i = 0; i < picard_rank; ++i) r[1 + i] = t_coeffs[i];
  return r;
}

SurfClass SurfaceDatum::e_class() const {
  SurfClass r = zero_class();
  r[c_index] = e_point_coeff();
  return r;
}

bool SurfaceDatum::t_is_zero() const {
  for (const auto& x : t_coeffs)
    if (!x.is_zero()) return false;
  return true;
}

SurfClass SurfaceDatum::todd_grade1() const {
  SurfClass r = t_class();
  for (auto& x : r) x = x * Rat(1, 2);
  return r;
}

SurfClass SurfaceDatum::todd_grade2() const {
  SurfClass t = t_class();
  SurfClass r = mul(t, t);
  SurfClass e = e_class();
  for (int i = 0; i < dim; ++i) r[i] = (r[i] + e[i]) * Rat(1, 12);
  return r;
}

std::string SurfaceDatum::class_str(const SurfClass& x) const {
  std::string s;
  for (int i = 0; i < dim; ++i) {
    if (x[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += x[i] == Rat(1) ? basis_name(i) : x[i].str() + "*" + basis_name(i);
  }
  return s.empty() ? "0" : s;
}

std::vector<std::vector<Rat>> invert_matrix(const std::vector<std::vector<Rat>>& m) {
  size_t n = m.size();
  auto a = m;
  std::vector<std::vector<Rat>> inv(n, std::vector<Rat>(n, Rat(0)));
  for (size_t i = 0; i < n; ++i) inv[i][i] = Rat(1);
  for (size_t col = 0; col < n; ++col) {
    size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) throw std::invalid_argument("singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rat p = a[col][col];
    for (size_t j = 0; j < n; ++j) {
      a[col][j] /= p;
      inv[col][j] /= p;
    }
    for (size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      Rat f = a[r][col];
      for (size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

static void check_gram(const std::vector<std::vector<Rat>>& g, const char* what) {
  for (size_t i = 0; i < g.size(); ++i) {
    if (g[i].size() != g.size()) throw std::invalid_argument(std::string(what) + " not square");
    for (size_t j = 0; j < g.size(); ++j)
      if (g[i][j] != g[j][i]) throw std::invalid_argument(std::string(what) + " not symmetric");
  }
  invert_matrix(g);  // throws if singular
}

SurfaceDatum make_surface(const SurfaceConfig& cfg) {
  SurfaceDatum d;
  d.mode = cfg.mode;
  d.picard_rank = cfg.picard_rank;
  d.b = cfg.b;
  if (d.picard_rank < 0) throw std::invalid_argument("picard_rank must be >= 0");
  if (d.b < 1) throw std::invalid_argument("b must be >= 1");

  auto identity = [](int n) {
    std::vector<std::vector<Rat>> g(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i) g[i][i] = Rat(1);
    return g;
  };
  d.picard_gram = cfg.picard_gram.empty() ? identity(d.picard_rank) : cfg.picard_gram;
  if ((int)d.picard_gram.size() != d.picard_rank)
    throw std::invalid_argument("picard_gram size mismatch");
  check_gram(d.picard_gram, "picard_gram");

  if (d.mode == SurfaceMode::Split) {
    d.transcendental_gram =
        cfg.transcendental_gram.empty() ? identity(d.b) : cfg.transcendental_gram;
    if ((int)d.transcendental_gram.size() != d.b)
      throw std::invalid_argument("transcendental_gram size mismatch");
    check_gram(d.transcendental_gram, "transcendental_gram");
  } else if (!cfg.transcendental_gram.empty()) {
    throw std::invalid_argument("transcendental_gram is a split-mode key");
  }

  d.t_coeffs = cfg.t_coeffs.empty() ? std::vector<Rat>(d.picard_rank, Rat(0)) : cfg.t_coeffs;
  if ((int)d.t_coeffs.size() != d.picard_rank)
    throw std::invalid_argument("t_coeffs size mismatch");
  if (d.mode == SurfaceMode::K3Chow)
    for (const auto& x : d.t_coeffs)
      if (!x.is_zero())
        throw std::invalid_argument("canonical class must vanish in k3-chow mode");

  d.synthetic = (d.picard_rank + d.b != 22);
  int ntau = d.mode == SurfaceMode::Split ? d.b : 0;
  d.dim = 1 + d.picard_rank + ntau + 1;
  d.c_index = d.dim - 1;

  d.pairing_.assign(d.dim, std::vector<Rat>(d.dim, Rat(0)));
  d.pairing_[0][d.c_index] = Rat(1);
  d.pairing_[d.c_index][0] = Rat(1);
  for (int i = 0; i < d.picard_rank; ++i)
    for (int j = 0; j < d.picard_rank; ++j) d.pairing_[1 + i][1 + j] = d.picard_gram[i][j];
  for (int a = 0; a < ntau; ++a)
    for (int bb = 0; bb < ntau; ++bb)
      d.pairing_[1 + d.picard_rank + a][1 + d.picard_rank + bb] = d.transcendental_gram[a][bb];

  auto pinv = invert_matrix(d.pairing_);
  // dual(i) = Sum_j pinv[j][i] basis_j  (pairing symmetric, so either index works)
  d.dual_.assign(d.dim, std::vector<Rat>(d.dim, Rat(0)));
  for (int i = 0; i < d.dim; ++i)
    for (int j = 0; j < d.dim; ++j) d.dual_[i][j] = pinv[j][i];
  return d;
}

SurfaceConfig parse_surface_config(const std::string& text) {
  // token stream with '#' comments
  std::vector<std::string> toks;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string t;
    while (ls >> t) toks.push_back(t);
  }
  SurfaceConfig cfg;
  cfg.picard_rank = -1;
  cfg.b = -1;
  size_t pos = 0;
  auto need = [&](const char* key) {
    if (pos >= toks.size())
      throw std::invalid_argument(std::string("surface config: missing value for ") + key);
    return toks[pos++];
  };
  auto read_matrix = [&](int n, const char* key) {
    std::vector<std::vector<Rat>> m;
    if (pos < toks.size() && toks[pos] == "identity") {
      ++pos;
      return m;  // empty => identity
    }
    m.assign(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m[i][j] = Rat::parse(need(key));
    return m;
  };
  while (pos < toks.size()) {
    std::string key = toks[pos++];
    if (key == "mode") {
      std::string v = need("mode");
      if (v == "k3-chow")
        cfg.mode = SurfaceMode::K3Chow;
      else if (v == "split")
        cfg.mode = SurfaceMode::Split;
      else
        throw std::invalid_argument("surface config: unknown mode '" + v + "'");
    } else if (key == "picard_rank") {
      cfg.picard_rank = atoi(need(key.c_str()).c_str());
    } else if (key == "b") {
      cfg.b = atoi(need(key.c_str()).c_str());
    } else if (key == "picard_gram") {
      if (cfg.picard_rank < 0)
        throw std::invalid_argument("surface config: picard_rank must precede picard_gram");
      cfg.picard_gram = read_matrix(cfg.picard_rank, "picard_gram");
    } else if (key == "transcendental_gram") {
      if (cfg.b < 0)
        throw std::invalid_argument("surface config: b must precede transcendental_gram");
      cfg.transcendental_gram = read_matrix(cfg.b, "transcendental_gram");
    } else if (key == "t_coeffs") {
      if (cfg.picard_rank < 0)
        throw std::invalid_argument("surface config: picard_rank must precede t_coeffs");
      cfg.t_coeffs.clear();
      for (int i = 0; i < cfg.picard_rank; ++i) cfg.t_coeffs.push_back(Rat::parse(need("t_coeffs")));
    } else {
      throw std::invalid_argument("surface config: unknown key '" + key + "'");
    }
  }
  if (cfg.picard_rank < 0) throw std::invalid_argument("surface config: picard_rank required");
  if (cfg.b < 0) throw std::invalid_argument("surface config: b required");
  return cfg;
}

SurfaceConfig load_surface_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::invalid_argument("cannot open surface config '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_surface_config(ss.str());
}

}  // namespace hilbfock
