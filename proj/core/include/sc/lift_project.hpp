#pragma once

#include "sc/coarsen.hpp"
#include "sc/dense.hpp"
#include "sc/graph.hpp"

namespace sc {

/// The three projection/lift/operator triples relating a graph functional
/// to its coarse counterpart:
///
///   CombQuadratic:          proj = P,                lift = P+,               op = D^ - W^
///   DoublyWeightedRayleigh: proj = Gamma^{-1/2} P+^T, lift = P+ Gamma^{-1/2}, op = Gamma^{-1/2} L^ Gamma^{-1/2}
///   NormalizedQuadratic:    proj = D^^{1/2} P D^{-1/2}, lift = D^{1/2} P+ D^^{-1/2}, op = I - D^^{-1/2} W^ D^^{-1/2}
enum class OperatorChoice {
  CombQuadratic,
  DoublyWeightedRayleigh,
  NormalizedQuadratic,
};

/// Operator on the coarse graph for the chosen row. The normalized row
/// requires no isolated vertices in either graph.
SymmetricMatrix coarse_operator(OperatorChoice choice, const Graph& g, const CoarseningResult& cr);

/// Lift a coarse vector (length n^) up to the original graph (length N).
Vector lift(OperatorChoice choice, const Graph& g, const CoarseningResult& cr, const Vector& xhat);

/// Project an original-graph vector down to the coarse graph.
/// project(lift(x)) = x for every row.
Vector project(OperatorChoice choice, const Graph& g, const CoarseningResult& cr, const Vector& x);

}  // namespace sc
