#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "efsolve/barrier.hpp"
#include "efsolve/config.hpp"
#include "efsolve/eigen.hpp"
#include "efsolve/exhaustion.hpp"

namespace efsolve {

// All numeric CSV/JSON output uses 17 significant digits ("%.17g"), so equal
// runs produce byte-identical files.
std::string format_double(double v);

// CSV writers (LF line endings, header row, deterministic formatting).
std::string solution_csv(const RadialProfile& u, const RadialProfile& v);
std::string barrier_csv(const BarrierData& barrier, const SupersolutionReport& margins,
                        const RadialGrid& grid);
std::string eigen_csv(const EigenPair& eig);

// JSON report fragments.
nlohmann::json to_json(const SolveReport& report);
nlohmann::json to_json(const IntegrabilityVerdict& verdict);
nlohmann::json to_json(const ProbeReport& probe);
nlohmann::json solve_report_json(const RunConfig& config,
                                 const IntegrabilityVerdict& verdict,
                                 const KResult& k, const EntireSolution& entire);

// Minimal line plot of u and v against r (pure presentation; nothing reads
// it back).
std::string solution_svg(const RadialProfile& u, const RadialProfile& v);

void write_file(const std::string& path, const std::string& contents);

}  // namespace efsolve
