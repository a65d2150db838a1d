#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <span>

#include "catmouse/graph.hpp"

namespace catmouse {

/// Tree on n = code.size() + 2 vertices encoded by a Prüfer sequence.
Tree tree_from_prufer(std::span<const VertexId> code);

/// n^(n-2) for n >= 2, the number of labelled trees.
std::uint64_t labelled_tree_count(std::size_t n);

/// Calls `visit` on every labelled tree with n >= 2 vertices, in
/// lexicographic Prüfer order. Stops early when `visit` returns false.
/// Returns the number of trees visited.
std::uint64_t for_each_labelled_tree(std::size_t n, const std::function<bool(const Tree&)>& visit);

/// Uniform random labelled tree on n >= 2 vertices.
Tree random_tree(std::size_t n, std::mt19937_64& rng);

/// `base` with `extra` vertices attached one at a time to uniformly chosen
/// existing vertices. New vertices get labels following the largest existing one.
Tree random_supertree(const Tree& base, std::size_t extra, std::mt19937_64& rng);

}  // namespace catmouse
