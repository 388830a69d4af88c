#pragma once

#include "curv2k/curvature.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace curv2k {

/// R = (kappa/2) g ^ g; constant sectional curvature kappa. kappa = 0 is flat.
CurvatureTensor constant_curvature(int n, double kappa);

/// Block sum of two round factors S^p(r1) x S^q(r2). Einstein requires
/// (p-1)/r1^2 == (q-1)/r2^2; otherwise throws, naming the r2 that works.
CurvatureTensor product_spheres(int p, int q, double r1, double r2);

/// Complex projective space CP^m with the Fubini-Study metric scaled so the
/// holomorphic sectional curvature is c; real dimension n = 2m, m >= 2.
CurvatureTensor fubini_study(int m, double c);

/// Seeded random Einstein tensor: a random Bianchi tensor's Weyl part scaled
/// to |W|^2 = amp^2 * 2n(n-1), plus (1/2) g ^ g, so the mean second-kind
/// eigenvalue is 1 and |W|^2/|R|^2 = amp^2/(1+amp^2). amp = 0 gives the unit
/// sphere. Deterministic for a fixed seed. Requires n >= 4.
CurvatureTensor random_einstein(int n, std::uint64_t seed, double weyl_amplitude = 1.0);

struct ModelSpec {
  enum class Kind { constant_curvature, flat, product_spheres, fubini_study, random_einstein };
  Kind kind = Kind::constant_curvature;
  int n = 4;
  double kappa = 1.0;           // constant_curvature
  int p = 2, q = 2;             // product_spheres
  double r1 = 1.0, r2 = -1.0;   // r2 < 0: derive the Einstein-tuned radius
  int m = 2;                    // fubini_study
  double c = 4.0;
  std::uint64_t seed = 0;       // random_einstein
  double amplitude = 1.0;
  std::string label;            // the string it was parsed from
};

/// Grammar: "sphere:n=4,k=1", "flat:n=4", "s2xs2",
/// "products:p=2,q=3,r1=1[,r2=...]", "cpm:m=2,c=4",
/// "random:n=5,seed=7,amp=1". Throws std::invalid_argument on bad input.
ModelSpec parse_model_spec(const std::string& s);

CurvatureTensor build_model(const ModelSpec& spec);

struct CorpusEntry {
  std::string label;
  int n;
  CurvatureTensor tensor;
};

/// Named model spaces plus `randoms_per_n` seeded random Einstein tensors
/// for each n in [n_min, n_max].
std::vector<CorpusEntry> standard_corpus(int n_min, int n_max, int randoms_per_n,
                                         std::uint64_t seed, double amplitude = 1.0);

}  // namespace curv2k
