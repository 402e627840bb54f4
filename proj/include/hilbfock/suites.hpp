#pragma once

#include "hilbfock/certificate.hpp"
#include "hilbfock/surface.hpp"

namespace hilbfock {

struct RunConfig {
  int max_mode = 4;
  int max_weight = 6;
  int lqw_mode = 2;
  int lqw_weight = 6;
  int max_level = 6;
  int chern_degree = 8;
  int sp_n = 4;
  int oracle_count = 1000;
  std::vector<int> b_list;  // shapovalov charges; empty = 2..21
  int b = 2;                // rank for yin/gl/kimura
  int b_model = -1;         // explicit kimura control; -1 = default sweep
};

const std::vector<std::string>& all_suites();

// Runs one named suite; certificates carry the surface description.
// Precondition violations (unknown suite, unusable datum) throw
// std::invalid_argument; verification failures are reported in certificates.
std::vector<VerificationCertificate> run_suite(const std::string& name, const RunConfig& cfg,
                                               const SurfaceDatum& d,
                                               const std::string& surface_desc);

}  // namespace hilbfock
