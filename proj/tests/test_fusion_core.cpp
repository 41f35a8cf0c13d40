#include "doctest.h"

#include "mtc/modular_data.hpp"
#include "mtc/quantum_group.hpp"

#include <numbers>

using namespace mtc;
using C = std::complex<double>;

namespace {

// S_ab = sqrt(2/(k+2)) sin((a+1)(b+1) pi/(k+2)) for SU(2)_k
Eigen::MatrixXd su2_closed_form(int k) {
  Eigen::MatrixXd S(k + 1, k + 1);
  for (int a = 0; a <= k; ++a)
    for (int b = 0; b <= k; ++b)
      S(a, b) = std::sqrt(2.0 / (k + 2)) * std::sin((a + 1) * (b + 1) * std::numbers::pi / (k + 2));
  return S;
}

}  // namespace

TEST_CASE("SU(2)_1 modular data") {
  const auto md = su_modular_data(2, 1);
  CHECK(validate_modular_data(md).empty());
  CHECK(md.labels == std::vector<std::string>{"()", "(1)"});
  CHECK((md.S.real() - su2_closed_form(1)).cwiseAbs().maxCoeff() < 1e-12);
  CHECK(md.S.imag().cwiseAbs().maxCoeff() < 1e-12);
  CHECK(std::abs(quantum_dim(md, 1) - 1.0) < 1e-12);
  CHECK(std::abs(global_D(md) - std::sqrt(2.0)) < 1e-12);
  CHECK(std::abs(md.theta(1) - C(0, 1)) < 1e-12);
  CHECK(std::abs(gauss_sum_delta(md) - (1.0 + 1.0 / md.theta(1))) < 1e-12);
}

TEST_CASE("SU(2)_k matches the sine formula") {
  for (int k = 0; k <= 8; ++k) {
    const auto md = su_modular_data(2, k);
    CHECK((md.S - su2_closed_form(k).cast<C>()).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("SU(2)_2 scalars") {
  const auto md = su_modular_data(2, 2);
  const auto d = quantum_dims(md);
  CHECK(std::abs(d(0) - 1.0) < 1e-12);
  CHECK(std::abs(d(1) - std::sqrt(2.0)) < 1e-12);
  CHECK(std::abs(d(2) - 1.0) < 1e-12);
  CHECK(std::abs(global_D(md) - 2.0) < 1e-12);
  CHECK(std::abs(std::abs(gauss_sum_delta(md) / global_D(md)) - 1.0) < 1e-12);
  CHECK(std::abs(std::abs(anomaly_scalar(md, 1)) - 1.0) < 1e-12);
}

TEST_CASE("global dimension against an independent oracle") {
  CHECK(std::abs(global_D(su_modular_data(2, 3)) - 2.68999404785583) < 1e-11);
  CHECK(std::abs(global_D(su_modular_data(3, 2)) - 3.29455641418533) < 1e-11);
  CHECK(std::abs(global_D(su_modular_data(4, 5)) - 58.93768953371734) < 1e-9);
  CHECK(std::abs(global_D(su_modular_data(3, 1)) - std::sqrt(3.0)) < 1e-12);
  const auto d = quantum_dims(su_modular_data(3, 2));
  CHECK(std::abs(d.real().maxCoeff() - std::numbers::phi) < 1e-12);
}

TEST_CASE("trivial category") {
  const auto md = trivial_modular_data();
  CHECK(validate_modular_data(md).empty());
  CHECK(std::abs(global_D(md) - 1.0) < 1e-15);
  CHECK(std::abs(gauss_sum_delta(md) - 1.0) < 1e-15);
  CHECK(std::abs(anomaly_scalar(md, 5) - 1.0) < 1e-15);
  CHECK(std::abs(quantum_dim(md, 0) - 1.0) < 1e-15);
}

TEST_CASE("validation reports and structural errors") {
  auto md = su_modular_data(2, 1);
  md.S(0, 1) += 0.1;
  const auto rep = validate_modular_data(md);
  REQUIRE(!rep.empty());
  CHECK(rep.front().code == "S-symmetry");

  auto bad = su_modular_data(2, 1);
  bad.dual = {1, 1};
  try {
    validate_modular_data(bad);
    CHECK(false);
  } catch (const StructuralError& e) {
    CHECK(e.code() == "dual-involution");
  }
  auto shape = su_modular_data(2, 1);
  shape.theta.resize(3);
  CHECK_THROWS_AS(validate_modular_data(shape), StructuralError);
  CHECK_THROWS_AS(quantum_dim(shape, 7), std::out_of_range);
}

TEST_CASE("twist conventions are conjugate for real dims") {
  const auto md = su_modular_data(3, 2);
  CHECK(std::abs(gauss_sum_delta(md, TwistConvention::direct) - std::conj(gauss_sum_delta(md))) < 1e-12);
}

TEST_CASE("Verlinde fusion examples") {
  const auto f1 = verlinde_fusion(su_modular_data(2, 1));
  CHECK(f1(1, 1, 0) == 1);
  CHECK(f1(1, 1, 1) == 0);
  const auto f2 = verlinde_fusion(su_modular_data(2, 2));
  CHECK(f2(1, 1, 0) == 1);
  CHECK(f2(1, 1, 2) == 1);
  CHECK(f2(1, 1, 1) == 0);
  for (int i = 0; i < 3; ++i) CHECK(f2(0, i, i) == 1);
}

TEST_CASE("Verlinde fusion rejects non-integral data") {
  auto md = su_modular_data(2, 2);
  md.S(1, 1) += 0.05;
  CHECK_THROWS_AS(verlinde_fusion(md), NumericalError);
}

TEST_CASE("fusion axioms, dims and anomaly properties over small families") {
  for (int N = 2; N <= 4; ++N)
    for (int k = 0; k <= 6; ++k) {
      CAPTURE(N);
      CAPTURE(k);
      const auto md = su_modular_data(N, k);
      CHECK(validate_modular_data(md).empty());
      const auto fus = verlinde_fusion(md);
      CHECK(fusion_axiom_violations(fus, md.dual, md.zero).empty());
      const auto d = quantum_dims(md);
      for (int i = 0; i < md.rank(); ++i) {
        CHECK(d(i).real() > 0);
        CHECK(std::abs(d(i).imag()) < 1e-10);
        CHECK(std::abs(std::abs(md.theta(i)) - 1.0) < 1e-12);
      }
      for (long long s : {1LL, 2LL, 7LL, -3LL})
        CHECK(std::abs(anomaly_scalar(md, s) * anomaly_scalar(md, -s) - 1.0) < 1e-9);
      CHECK(std::abs(anomaly_scalar(md, 0) - 1.0) < 1e-15);
    }
}

TEST_CASE("Frobenius-Schur indicators") {
  const auto md2 = su_modular_data(2, 2);
  const auto f2 = verlinde_fusion(md2);
  CHECK(fs_indicator(md2, f2, 1) == -1);
  CHECK(fs_indicator(md2, f2, 0) == 1);
  const auto md3 = su_modular_data(3, 2);
  const auto f3 = verlinde_fusion(md3);
  CHECK(fs_indicator(md3, f3, md3.find("(1)")) == 0);
  for (int i = 0; i < md3.rank(); ++i) {
    const int s = fs_indicator(md3, f3, i);
    if (md3.self_dual(i)) CHECK(s * s == 1);
  }
}
