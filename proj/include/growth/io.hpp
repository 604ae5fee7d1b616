#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "growth/keynes.hpp"
#include "growth/series.hpp"
#include "growth/solow.hpp"

namespace growth::io {

// Shortest representation with up to `digits` significant digits
// (printf %g), applied to every numeric cell this toolkit writes.
std::string format_sig(double value, int digits = 12);

// Writes to a sibling temp file and renames on success, so a failed run
// never leaves a truncated file behind.
void atomic_write(const std::filesystem::path& path, std::string_view content);

// time,kd,y,r,w
std::string to_csv(const solow::SolowPath& path);

// time,b,b_prime
std::string to_csv(const keynes::CapitalGrowthPath& path);

// [year,]time,kd,U,dU_over_U,y,r,w,u  (u = 1 - 1/U, display only).
// `years` adds the leading calendar-year column when non-empty.
std::string to_csv(const keynes::KeynesPath& path,
                   const std::vector<int>& years = {});

// year,U,dU_over_U,b,b_prime,n_t,dep_var,time_index[,labor_share],y_over_k
std::string to_csv(const data::DerivedSeries& ds);

}  // namespace growth::io
