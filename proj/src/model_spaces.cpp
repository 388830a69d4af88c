#include "curv2k/model_spaces.hpp"

#include "curv2k/rng.hpp"

#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>

namespace curv2k {

CurvatureTensor constant_curvature(int n, double kappa) {
  if (n < 2) throw std::invalid_argument("constant_curvature: requires n >= 2");
  const SymTensor g = SymTensor::metric(n);
  return (kappa / 2.0) * kulkarni_nomizu(g, g);
}

CurvatureTensor product_spheres(int p, int q, double r1, double r2) {
  if (p < 2 || q < 2) throw std::invalid_argument("product_spheres: factors need p, q >= 2");
  if (r1 <= 0.0 || r2 <= 0.0) throw std::invalid_argument("product_spheres: radii must be positive");
  const double c1 = (p - 1) / (r1 * r1);
  const double c2 = (q - 1) / (r2 * r2);
  if (std::fabs(c1 - c2) > 1e-12 * std::max(c1, c2)) {
    std::ostringstream msg;
    msg << "product_spheres: not Einstein; with p=" << p << ", q=" << q << ", r1=" << r1
        << " the second radius must be r2=" << r1 * std::sqrt(double(q - 1) / double(p - 1));
    throw std::invalid_argument(msg.str());
  }
  const int n = p + q;
  const double k1 = 1.0 / (r1 * r1);
  const double k2 = 1.0 / (r2 * r2);
  Tensor4 t(n);
  auto fill_block = [&t](int lo, int hi, double kap) {
    for (int i = lo; i < hi; ++i)
      for (int j = lo; j < hi; ++j)
        for (int k = lo; k < hi; ++k)
          for (int l = lo; l < hi; ++l)
            t.at(i, j, k, l) = kap * ((i == k ? 1.0 : 0.0) * (j == l ? 1.0 : 0.0) -
                                      (i == l ? 1.0 : 0.0) * (j == k ? 1.0 : 0.0));
  };
  fill_block(0, p, k1);
  fill_block(p, n, k2);
  return CurvatureTensor::from_tensor(std::move(t));
}

CurvatureTensor fubini_study(int m, double c) {
  if (m < 2)
    throw std::invalid_argument("fubini_study: requires m >= 2 (m = 1 is the round 2-sphere)");
  const int n = 2 * m;
  // Standard complex structure J e_{2a} = e_{2a+1}.
  Matrix jmat(n, n);
  for (int a = 0; a < m; ++a) {
    jmat(2 * a, 2 * a + 1) = 1.0;
    jmat(2 * a + 1, 2 * a) = -1.0;
  }
  Tensor4 t(n);
  auto d = [](int i, int j) { return i == j ? 1.0 : 0.0; };
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
          t.at(i, j, k, l) =
              (c / 4.0) * (d(i, k) * d(j, l) - d(i, l) * d(j, k) + jmat(i, k) * jmat(j, l) -
                           jmat(i, l) * jmat(j, k) + 2.0 * jmat(i, j) * jmat(k, l));
  return CurvatureTensor::from_tensor(std::move(t));
}

CurvatureTensor random_einstein(int n, std::uint64_t seed, double weyl_amplitude) {
  if (n < 4) throw std::invalid_argument("random_einstein: requires n >= 4");
  if (weyl_amplitude < 0.0) throw std::invalid_argument("random_einstein: amplitude must be >= 0");
  const CurvatureTensor round = constant_curvature(n, 1.0);
  if (weyl_amplitude == 0.0) return round;

  CounterRng rng(seed);
  const int npairs = n * (n - 1) / 2;

  // Random symmetric matrix on Lambda^2 expanded to a pair-symmetric rank-4
  // tensor, then projected onto the Bianchi subspace.
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(npairs);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);

  Matrix sym(npairs, npairs);
  for (int a = 0; a < npairs; ++a)
    for (int b = a; b < npairs; ++b) {
      const double v = rng.next_gaussian();
      sym(a, b) = v;
      sym(b, a) = v;
    }

  Tensor4 raw(n);
  for (int a = 0; a < npairs; ++a)
    for (int b = 0; b < npairs; ++b) {
      const auto [i, j] = pairs[a];
      const auto [k, l] = pairs[b];
      const double v = sym(a, b);
      raw.at(i, j, k, l) = v;
      raw.at(j, i, k, l) = -v;
      raw.at(i, j, l, k) = -v;
      raw.at(j, i, l, k) = v;
    }

  CurvatureTensor weyl = decompose(bianchi_project(raw)).weyl;
  const double wn = std::sqrt(norm_sq(weyl));
  if (wn == 0.0) return round;
  weyl *= weyl_amplitude * std::sqrt(2.0 * n * (n - 1)) / wn;
  return weyl + round;
}

namespace {

std::map<std::string, std::string> parse_kv(const std::string& s) {
  std::map<std::string, std::string> kv;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("model spec: expected key=value, got '" + item + "'");
    kv[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return kv;
}

double get_double(const std::map<std::string, std::string>& kv, const std::string& key,
                  double fallback) {
  const auto it = kv.find(key);
  return it == kv.end() ? fallback : std::stod(it->second);
}

int get_int(const std::map<std::string, std::string>& kv, const std::string& key, int fallback) {
  const auto it = kv.find(key);
  return it == kv.end() ? fallback : std::stoi(it->second);
}

}  // namespace

ModelSpec parse_model_spec(const std::string& s) {
  ModelSpec spec;
  spec.label = s;
  const auto colon = s.find(':');
  const std::string kind = s.substr(0, colon);
  const auto kv = colon == std::string::npos ? std::map<std::string, std::string>{}
                                             : parse_kv(s.substr(colon + 1));
  try {
    if (kind == "sphere") {
      spec.kind = ModelSpec::Kind::constant_curvature;
      spec.n = get_int(kv, "n", 4);
      spec.kappa = get_double(kv, "k", 1.0);
    } else if (kind == "flat") {
      spec.kind = ModelSpec::Kind::flat;
      spec.n = get_int(kv, "n", 4);
      spec.kappa = 0.0;
    } else if (kind == "s2xs2") {
      spec.kind = ModelSpec::Kind::product_spheres;
      spec.p = spec.q = 2;
      spec.r1 = spec.r2 = 1.0;
      spec.n = 4;
    } else if (kind == "products") {
      spec.kind = ModelSpec::Kind::product_spheres;
      spec.p = get_int(kv, "p", 2);
      spec.q = get_int(kv, "q", 2);
      spec.r1 = get_double(kv, "r1", 1.0);
      spec.r2 = get_double(kv, "r2", -1.0);
      spec.n = spec.p + spec.q;
    } else if (kind == "cpm") {
      spec.kind = ModelSpec::Kind::fubini_study;
      spec.m = get_int(kv, "m", 2);
      spec.c = get_double(kv, "c", 4.0);
      spec.n = 2 * spec.m;
    } else if (kind == "random") {
      spec.kind = ModelSpec::Kind::random_einstein;
      spec.n = get_int(kv, "n", 4);
      spec.seed = static_cast<std::uint64_t>(get_int(kv, "seed", 0));
      spec.amplitude = get_double(kv, "amp", 1.0);
    } else {
      throw std::invalid_argument("model spec: unknown kind '" + kind + "'");
    }
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("model spec: malformed parameters in '" + s + "'");
  }
  return spec;
}

CurvatureTensor build_model(const ModelSpec& spec) {
  switch (spec.kind) {
    case ModelSpec::Kind::constant_curvature:
      return constant_curvature(spec.n, spec.kappa);
    case ModelSpec::Kind::flat:
      return constant_curvature(spec.n, 0.0);
    case ModelSpec::Kind::product_spheres: {
      const double r2 = spec.r2 > 0.0
                            ? spec.r2
                            : spec.r1 * std::sqrt(double(spec.q - 1) / double(spec.p - 1));
      return product_spheres(spec.p, spec.q, spec.r1, r2);
    }
    case ModelSpec::Kind::fubini_study:
      return fubini_study(spec.m, spec.c);
    case ModelSpec::Kind::random_einstein:
      return random_einstein(spec.n, spec.seed, spec.amplitude);
  }
  throw std::logic_error("build_model: unreachable");
}

std::vector<CorpusEntry> standard_corpus(int n_min, int n_max, int randoms_per_n,
                                         std::uint64_t seed, double amplitude) {
  std::vector<CorpusEntry> corpus;
  auto add = [&corpus](const std::string& label, int n, CurvatureTensor t) {
    corpus.push_back(CorpusEntry{label, n, std::move(t)});
  };
  for (int n = n_min; n <= n_max; ++n) {
    add("sphere:n=" + std::to_string(n) + ",k=1", n, constant_curvature(n, 1.0));
    if (n == 4) {
      add("s2xs2", 4, product_spheres(2, 2, 1.0, 1.0));
      add("cpm:m=2,c=4", 4, fubini_study(2, 4.0));
    }
    if (n == 5) add("products:p=2,q=3,r1=1", 5, product_spheres(2, 3, 1.0, std::sqrt(2.0)));
    if (n == 6) {
      add("products:p=3,q=3,r1=1", 6, product_spheres(3, 3, 1.0, 1.0));
      add("cpm:m=3,c=4", 6, fubini_study(3, 4.0));
    }
    if (n == 8) add("cpm:m=4,c=4", 8, fubini_study(4, 4.0));
    for (int i = 0; i < randoms_per_n; ++i) {
      const std::uint64_t s = mix64(seed + 1000003u * static_cast<std::uint64_t>(n) + i);
      add("random:n=" + std::to_string(n) + ",seed=" + std::to_string(s) +
              ",amp=" + std::to_string(amplitude),
          n, random_einstein(n, s, amplitude));
    }
  }
  return corpus;
}

}  // namespace curv2k
