#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "orbq/algebra/group.hpp"
#include "orbq/quantization/quantization.hpp"
#include "theta_oracle.hpp"

using namespace orbq;

namespace {

using Mat = std::vector<std::vector<Scalar>>;

Mat multiply(const Mat& a, const Mat& b) {
  const std::size_t n = a.size();
  Mat c(n, std::vector<Scalar>(n, Scalar(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) c[i][j] += a[i][k] * b[k][j];
  return c;
}

// Breadth-first closure over words in the generators.
std::size_t closure_order(const std::vector<Mat>& gens) {
  const std::size_t n = gens.front().size();
  Mat id(n, std::vector<Scalar>(n, Scalar(0)));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  std::set<Mat> seen{id};
  std::vector<Mat> frontier{id};
  while (!frontier.empty()) {
    std::vector<Mat> next;
    for (const auto& m : frontier)
      for (const auto& g : gens) {
        Mat p = multiply(m, g);
        if (seen.insert(p).second) next.push_back(p);
      }
    frontier = std::move(next);
  }
  return seen.size();
}

Mat to_mat(std::size_t n, std::initializer_list<long> e) {
  Mat m(n, std::vector<Scalar>(n));
  auto it = e.begin();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = *it++;
  return m;
}

OrthMatrix to_orth(const Mat& m) {
  std::vector<Scalar> v;
  for (const auto& row : m) v.insert(v.end(), row.begin(), row.end());
  return OrthMatrix(Matrix(m.size(), m.size(), v));
}

}  // namespace

TEST_CASE("group closure agrees with brute-force enumeration") {
  const std::vector<std::vector<Mat>> cases{
      {to_mat(2, {-1, 0, 0, -1})},
      {to_mat(2, {0, -1, 1, 0})},
      {to_mat(2, {0, 1, 1, 0}), to_mat(2, {-1, 0, 0, 1})},
      {to_mat(3, {0, 1, 0, 1, 0, 0, 0, 0, 1}), to_mat(3, {0, 0, 1, 0, 1, 0, 1, 0, 0}),
       to_mat(3, {-1, 0, 0, 0, 1, 0, 0, 0, 1})},
      {to_mat(3, {0, -1, 0, 1, 0, 0, 0, 0, -1})},
  };
  for (const auto& gens : cases) {
    std::vector<OrthMatrix> og;
    for (const auto& g : gens) og.push_back(to_orth(g));
    CHECK(generate_group(og).order() == closure_order(gens));
  }
  CHECK(closure_order(cases[2]) == 8);
  CHECK(closure_order(cases[3]) == 48);
}

TEST_CASE("degree-1 divergence coefficient is forced to 0") {
  for (std::size_t q : {1u, 2u, 3u}) {
    CHECK(oracle::degree1_invariant(q, Scalar(0), 20, 100 + q));
    CHECK_FALSE(oracle::degree1_invariant(q, Scalar(1), 20, 100 + q));
    CHECK_FALSE(oracle::degree1_invariant(q, ratio(-1, 3), 20, 100 + q));
    const DegreeTable t = solve_coefficients(1, q);
    CHECK(t.coefficient("DS.f") == Scalar(0));
  }
}

TEST_CASE("degree-2 gradient coefficient is 2/(q+3)") {
  for (std::size_t q : {1u, 2u, 3u}) {
    const Scalar a = ratio(2, static_cast<long>(q) + 3);
    CHECK(oracle::degree2_invariant(q, a, Scalar(0), 10, 200 + q));
    CHECK_FALSE(oracle::degree2_invariant(q, a + ratio(1, 7), Scalar(0), 10, 200 + q));
    CHECK_FALSE(oracle::degree2_invariant(q, a, ratio(1, 2), 10, 200 + q));
    const DegreeTable t = solve_coefficients(2, q);
    CHECK(t.coefficient("DS.Df") == a);
    CHECK(t.coefficient("DDS.f") == Scalar(0));
  }
}
