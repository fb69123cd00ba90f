#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cohesive/graph.hpp"
#include "cohesive/result.hpp"

namespace cohesive {

class DegenerateInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Moore–Penrose pseudo-inverse through the SVD; singular values below
/// max(rows, cols) * eps * s_max are treated as zero.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> pseudo_inverse(
    const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
  Eigen::JacobiSVD<Matrix> svd(m.eval(), Eigen::ComputeThinU | Eigen::ComputeThinV);
  const auto& s = svd.singularValues();
  if (s.size() == 0) return Matrix::Zero(m.cols(), m.rows());
  const Scalar tol = static_cast<Scalar>(std::max(m.rows(), m.cols())) *
                     Eigen::NumTraits<Scalar>::epsilon() * s.maxCoeff();
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> inv(s.size());
  for (Eigen::Index i = 0; i < s.size(); ++i) inv(i) = s(i) > tol ? Scalar(1) / s(i) : Scalar(0);
  return svd.matrixV() * inv.asDiagonal() * svd.matrixU().transpose();
}

/// Unbiased (n-1) sample covariance of the rows of `x`.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, Eigen::Dynamic> covariance(
    const Eigen::MatrixBase<Derived>& x) {
  if (x.rows() < 2) throw DegenerateInput("covariance needs at least two observations");
  auto centered = (x.rowwise() - x.colwise().mean()).eval();
  return (centered.transpose() * centered) / static_cast<typename Derived::Scalar>(x.rows() - 1);
}

/// Mahalanobis depth of each row of `x` relative to the origin,
///   depth(x_i) = 1 / (1 + x_i^T S^+ x_i),
/// where S is the sample covariance of the rows and S^+ its pseudo-inverse.
/// Throws DegenerateInput for fewer than two rows.
template <typename Derived>
Eigen::Matrix<typename Derived::Scalar, Eigen::Dynamic, 1> mahalanobis_depth(
    const Eigen::MatrixBase<Derived>& x) {
  const auto precision = pseudo_inverse(covariance(x));
  auto quad = ((x * precision).array() * x.array()).rowwise().sum();
  return (1 + quad).inverse().matrix();
}

enum class NodeFeature { Degree, Triangles };

struct AlphacoreOptions {
  std::vector<NodeFeature> features{NodeFeature::Degree, NodeFeature::Triangles};
};

/// Feature rows for every node of g, in id order.
Eigen::MatrixXd node_features(const Graph& g, const std::vector<NodeFeature>& features);

/// Peels, in rounds, every node whose depth in the surviving subgraph is
/// below alpha; features and covariance are recomputed each round. Stops when
/// nothing is removed or fewer than two nodes remain. 0 < alpha <= 1.
SubgraphResult alphacore(const Graph& g, double alpha, const AlphacoreOptions& opts = {});

/// max(sup(e) + 2, alpha * min(d(u), d(v))) in g. Throws
/// std::invalid_argument when (u, v) is not an edge.
double degree_support(const Graph& g, NodeId u, NodeId v, double alpha);

/// Maximal edge set where every edge has degree-support >= k, with support
/// and degrees measured among kept edges. k >= 2, alpha >= 0.
SubgraphResult k_core_truss(const Graph& g, unsigned k, double alpha);

/// Maximal subgraph in which every node has >= k incident strong ties
/// (edges in >= s triangles of the subgraph). Starts from the
/// max(k, s+1)-core. k >= 1.
SubgraphResult ks_core(const Graph& g, unsigned k, unsigned s);

/// |Γ(u) ∩ Γ(v)| / sqrt(|Γ(u)| |Γ(v)|) with Γ(x) = N(x) ∪ {x}.
double structural_similarity(const Graph& g, NodeId u, NodeId v);

enum class ScanRole { Core, Border, Outlier };

struct ScanLabels {
  std::vector<ScanRole> roles;
  // Index into the result's groups; empty for outliers.
  std::vector<std::optional<std::uint32_t>> cluster;
};

struct ScanOutput {
  SubgraphResult result;
  ScanLabels labels;
};

/// SCAN structural clustering. A node is a core when at least k members of
/// its closed neighborhood (itself included) are epsilon-similar to it.
/// Cores joined by epsilon-similar edges share a cluster; a non-core with an
/// epsilon-similar adjacent core is a border of the cluster of the smallest
/// such core. Everything else, isolated nodes included, is an outlier.
ScanOutput scan(const Graph& g, unsigned k, double epsilon);

}  // namespace cohesive
