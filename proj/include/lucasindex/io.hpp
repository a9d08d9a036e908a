#pragma once

#include <string>
#include <vector>

#include "lucasindex/empirical.hpp"

namespace lucasindex {

enum class OutputFormat { Text, Csv, Json };
OutputFormat parse_format(const std::string& name);

std::string format_fixed(double v, int digits);

// decompose: s, h, gamma0, disc, P, chi terms
std::string decompose_text(const DensityProfile& p);
std::string decompose_csv(const DensityProfile& p);
std::string decompose_json(const DensityProfile& p);

// G_u table at the minimal period, grouped by value in text mode
std::string gtable_text(const DensityProfile& p);
std::string gtable_csv(const DensityProfile& p);
std::string gtable_json(const DensityProfile& p);

// kummer diagnostics: n, case, #C_n, #C_n/[K_n:Q]
std::string conditions_csv(const ConditionContext& ctx, uint64_t n_max);

// closed-form density table
std::string density_text(const DensityProfile& p, uint64_t t_max);
std::string density_csv(const DensityProfile& p, uint64_t t_max);
std::string density_json(const DensityProfile& p, uint64_t t_max);

// raw scan tallies: t, count, density
std::string empirical_text(const EmpiricalTable& table);
std::string empirical_csv(const EmpiricalTable& table);
std::string empirical_json(const EmpiricalTable& table);

// compare: columns t, delta, delta_tilde, error_pct
std::string compare_text(const std::vector<CompareRow>& rows,
                         const EmpiricalTable& table);
std::string compare_csv(const std::vector<CompareRow>& rows);
std::string compare_json(const std::vector<CompareRow>& rows,
                         const EmpiricalTable& table);

} // namespace lucasindex
