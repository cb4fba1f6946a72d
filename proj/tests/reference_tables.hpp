#pragma once

// Reference tables for the two worked problems:
//   problem 1: q = x + 3x^2,          N(u) = u^2, branches in ascending order, m = 0..4
//   problem 2: q = |1/2 - x|^(-1/2),  N(u) = u^2, first four branches,        m = 0..8

#include <array>

#include "fdeig/model.hpp"

namespace fdeig::reference {

struct Row {
  double lambda;
  double sup_u1;
  double sup_u2;
  double residual;
};

inline TransmissionProblem problem1() {
  return {PotentialSpec::polynomial({0.0, 1.0, 3.0}), NonlinearitySpec::square()};
}

inline TransmissionProblem problem2() {
  return {PotentialSpec::inverse_sqrt_half(), NonlinearitySpec::square()};
}

inline const std::array<std::array<Row, 5>, 6> kProblem1 = {{
    {{{17.5459633797144, 0.24, 0.24, 0.55},
      {19.6940699073641, 0.19e-1, 0.25e-1, 0.19e-1},
      {19.6740808021547, 0.60e-3, 0.11e-2, 0.96e-3},
      {19.6754846046439, 0.28e-4, 0.51e-4, 0.36e-4},
      {19.6754786167117, 0.88e-6, 0.20e-5, 0.22e-5}}},
    {{{39.4784176043574, 0.16, 0.0, 0.11},
      {40.0755170720146, 0.80e-3, 0.13e-2, 0.26e-2},
      {40.0597952320099, 0.94e-4, 0.93e-4, 0.93e-4},
      {40.0595106843757, 0.20e-5, 0.29e-5, 0.63e-5},
      {40.0594734299829, 0.27e-6, 0.27e-6, 0.42e-6}}},
    {{{70.1838535188575, 0.12, 0.12, 0.36},
      {71.9666624409054, 0.37e-2, 0.46e-2, 0.48e-2},
      {71.9768253657124, 0.53e-5, 0.86e-4, 0.67e-4},
      {71.9766663564735, 0.12e-5, 0.20e-5, 0.23e-5},
      {71.9766690902938, 0.42e-7, 0.46e-7, 0.41e-7}}},
    {{{157.913670417429, 0.80e-1, 0.16, 0.49},
      {159.737504889796, 0.13e-2, 0.20e-2, 0.17e-2},
      {159.739358889030, 0.18e-4, 0.18e-4, 0.22e-4},
      {159.739350000888, 0.22e-6, 0.21e-6, 0.21e-6},
      {159.739350058922, 0.48e-9, 0.85e-9, 0.15e-8}}},
    {{{280.735414075430, 0.60e-1, 0.60e-1, 0.21},
      {282.620725160874, 0.57e-3, 0.13e-2, 0.18e-2},
      {282.622515077477, 0.12e-4, 0.10e-4, 0.11e-4},
      {282.622528329338, 0.36e-7, 0.79e-7, 0.56e-7},
      {282.622528620046, 0.28e-9, 0.24e-9, 0.59e-9}}},
    {{{355.305758439216, 0.53e-1, 0.0, 0.53e-1},
      {355.816547268956, 0.11e-3, 0.47e-4, 0.14e-3},
      {355.814884402534, 0.83e-6, 0.10e-5, 0.15e-5},
      {355.814878976396, 0.24e-8, 0.96e-8, 0.47e-7},
      {355.814878544097, 0.20e-9, 0.30e-9, 0.59e-9}}},
}};

/// l_n(m) = ln ||residual||, indexed [m][n].
inline const std::array<std::array<double, 6>, 5> kProblem1Log = {{
    {-0.60, -2.21, -1.02, -0.71, -1.56, -2.94},
    {-3.96, -5.95, -5.34, -6.38, -6.32, -8.87},
    {-6.95, -9.28, -9.61, -10.72, -11.42, -13.41},
    {-10.23, -11.97, -12.98, -15.38, -16.70, -16.87},
    {-13.03, -14.68, -17.01, -20.32, -21.25, -21.25},
}};

inline const std::array<std::array<Row, 9>, 4> kProblem2 = {{
    {{{17.545963379714401, 0.24, 0.24, 0.58},
      {21.814604661812502, 0.24e-1, 0.24e-1, 0.91e-2},
      {21.733545015000821, 0.15e-2, 0.15e-2, 0.33e-3},
      {21.734895246851330, 0.67e-4, 0.67e-4, 0.16e-4},
      {21.734885594786305, 0.24e-5, 0.24e-5, 0.49e-6},
      {21.734887489687971, 0.90e-7, 0.90e-7, 0.22e-7},
      {21.734887360755933, 0.42e-8, 0.42e-8, 0.11e-8},
      {21.734887362837029, 0.18e-9, 0.18e-9, 0.51e-10},
      {21.734887362829545, 0.73e-11, 0.73e-11, 0.18e-11}}},
    {{{39.478417604357434, 0.16, 0.0, 0.12},
      {41.751445051880136, 0.15e-2, 0.31e-2, 0.28e-3},
      {41.751095410924888, 0.17e-4, 0.26e-4, 0.13e-4},
      {41.751103408518688, 0.69e-7, 0.20e-5, 0.19e-6},
      {41.751101792373055, 0.10e-7, 0.30e-7, 0.91e-8},
      {41.751101774628877, 0.19e-9, 0.12e-8, 0.23e-9},
      {41.751101775581723, 0.63e-11, 0.35e-10, 0.59e-11},
      {41.751101775606647, 0.21e-12, 0.62e-12, 0.21e-12},
      {41.751101775606187, 0.33e-14, 0.33e-13, 0.33e-14}}},
    {{{70.183853518857661, 0.12, 0.12, 0.55e-1},
      {73.434236059947037, 0.36e-2, 0.36e-2, 0.57e-3},
      {73.462388394109106, 0.39e-4, 0.39e-4, 0.78e-4},
      {73.462228765029615, 0.33e-5, 0.33e-5, 0.18e-5},
      {73.462193970765803, 0.92e-7, 0.92e-7, 0.11e-6},
      {73.462193827166322, 0.52e-8, 0.52e-8, 0.48e-8},
      {73.462193886381801, 0.21e-9, 0.21e-9, 0.16e-9},
      {73.462193887216886, 0.89e-11, 0.89e-11, 0.13e-10},
      {73.462193887097591, 0.54e-12, 0.54e-12, 0.24e-12}}},
    {{{157.9136704174297379014, 0.89e-1, 0.16, 0.66e-1},
      {160.2464778440802534274, 0.50e-3, 0.14e-2, 0.88e-4},
      {160.2466449084238753618, 0.18e-5, 0.26e-5, 0.13e-5},
      {160.2466411888247570166, 0.33e-8, 0.62e-7, 0.17e-7},
      {160.2466412105927434146, 0.47e-10, 0.63e-9, 0.11e-9},
      {160.2466412109016291827, 0.50e-12, 0.33e-11, 0.12e-11},
      {160.2466412109020454979, 0.33e-14, 0.37e-13, 0.12e-13},
      {160.2466412109020583699, 0.31e-16, 0.42e-15, 0.11e-15},
      {160.2466412109020585522, 0.36e-18, 0.34e-17, 0.33e-17}}},
}};

}  // namespace fdeig::reference
