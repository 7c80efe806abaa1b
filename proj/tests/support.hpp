#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "flagconn/chevalley.hpp"
#include "flagconn/rootsys.hpp"

namespace support {

using flagconn::Family;

inline const std::vector<std::pair<Family, int>>& small_systems() {
  static const std::vector<std::pair<Family, int>> v = {
      {Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::A, 4}, {Family::B, 2}, {Family::B, 3},
      {Family::B, 4}, {Family::C, 2}, {Family::C, 3}, {Family::C, 4}, {Family::D, 3}, {Family::D, 4}};
  return v;
}

inline const std::vector<std::pair<Family, int>>& sweep_systems() {
  static const std::vector<std::pair<Family, int>> v = {
      {Family::A, 2}, {Family::A, 3}, {Family::B, 2}, {Family::B, 3}, {Family::C, 3}, {Family::D, 4}};
  return v;
}

inline flagconn::MVector random_mvector(std::mt19937_64& rng, std::size_t dim) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  flagconn::MVector v(dim);
  for (std::size_t k = 0; k < dim; ++k) v[k] = u(rng);
  return v;
}

inline std::complex<double> random_complex(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  return {u(rng), u(rng)};
}

}  // namespace support
