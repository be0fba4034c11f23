#include "efsolve/io.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "efsolve/errors.hpp"

namespace efsolve {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string solution_csv(const RadialProfile& u, const RadialProfile& v) {
  std::ostringstream os;
  os << "r,u,v\n";
  for (int i = 0; i < u.size(); ++i) {
    os << format_double(u.grid.r(i)) << ',' << format_double(u[i]) << ','
       << format_double(v[i]) << '\n';
  }
  return os.str();
}

std::string barrier_csv(const BarrierData& barrier, const SupersolutionReport& margins,
                        const RadialGrid& grid) {
  std::ostringstream os;
  os << "r,w,v,margin\n";
  for (int i = 0; i < grid.node_count(); ++i) {
    os << format_double(grid.r(i)) << ',' << format_double(barrier.w_samples[i]) << ','
       << format_double(barrier.v_samples[i]) << ',';
    // The margin is defined at interior nodes only.
    if (i >= 1 && i <= grid.M) {
      os << format_double(margins.margins[static_cast<std::size_t>(i)]);
    } else {
      os << "nan";
    }
    os << '\n';
  }
  return os.str();
}

std::string eigen_csv(const EigenPair& eig) {
  std::ostringstream os;
  os << "r,phi1\n";
  for (int i = 0; i < eig.phi1.size(); ++i) {
    os << format_double(eig.phi1.grid.r(i)) << ',' << format_double(eig.phi1[i]) << '\n';
  }
  return os.str();
}

nlohmann::json to_json(const SolveReport& report) {
  return nlohmann::json{
      {"iterations", report.iterations},
      {"residual_history", report.residual_history},
      {"final_residual", report.final_residual},
      {"bracket_projections", report.bracket_projections},
      {"damping_events", report.damping_events},
      {"gradient_regularization", report.gradient_regularization},
      {"converged", report.converged},
  };
}

nlohmann::json to_json(const IntegrabilityVerdict& verdict) {
  return nlohmann::json{
      {"classification", to_string(verdict.classification)},
      {"value_estimate", verdict.value_estimate},
      {"tail_bound_used", verdict.tail_bound_used},
      {"error_estimate", verdict.error_estimate},
  };
}

nlohmann::json to_json(const ProbeReport& probe) {
  return nlohmann::json{
      {"applicable", probe.applicable},
      {"passed", probe.passed},
      {"m_hat", probe.m_hat},
      {"threshold", probe.threshold},
      {"radius", probe.radius},
      {"from_supersolution", to_json(probe.from_supersolution)},
      {"from_midpoint", to_json(probe.from_midpoint)},
  };
}

nlohmann::json solve_report_json(const RunConfig& config,
                                 const IntegrabilityVerdict& verdict,
                                 const KResult& k, const EntireSolution& entire) {
  nlohmann::json balls = nlohmann::json::array();
  for (const auto& b : entire.balls) {
    balls.push_back({
        {"radius", b.radius},
        {"lambda1", b.lambda1},
        {"epsilon", b.epsilon},
        {"solve", to_json(b.report)},
    });
  }
  return nlohmann::json{
      {"problem",
       {
           {"N", config.dimension},
           {"gamma", config.gamma},
           {"a", config.a},
           {"p", config.p_source},
           {"q", config.q_source},
           {"phi", config.phi_source ? nlohmann::json(*config.phi_source)
                                     : nlohmann::json(nullptr)},
       }},
      {"integrability", to_json(verdict)},
      {"barrier",
       {
           {"K_double", k.k_double},
           {"K_reduced", k.k_reduced},
           {"K", entire.K},
           {"c", entire.c},
       }},
      {"entire",
       {
           {"radii_used", entire.radii_used},
           {"successive_gaps", entire.successive_gaps},
           {"tail_value", entire.tail_value},
           {"certified", entire.certified},
       }},
      {"balls", balls},
  };
}

std::string solution_svg(const RadialProfile& u, const RadialProfile& v) {
  const int width = 800, height = 500;
  const int ml = 60, mr = 20, mt = 20, mb = 45;
  const double R = u.grid.R;
  double ymax = 0.0;
  for (int i = 0; i < v.size(); ++i) ymax = std::max(ymax, v[i]);
  if (ymax <= 0.0) ymax = 1.0;
  ymax *= 1.05;

  auto X = [&](double r) { return ml + r / R * (width - ml - mr); };
  auto Y = [&](double y) { return height - mb - y / ymax * (height - mt - mb); };

  auto polyline = [&](const RadialProfile& p, const char* color) {
    std::ostringstream os;
    os << "  <polyline fill=\"none\" stroke=\"" << color
       << "\" stroke-width=\"1.5\" points=\"";
    const int stride = std::max(1, p.size() / 2000);
    for (int i = 0; i < p.size(); i += stride) {
      os << X(p.grid.r(i)) << ',' << Y(p[i]) << ' ';
    }
    os << X(p.grid.R) << ',' << Y(p[p.size() - 1]);
    os << "\"/>\n";
    return os.str();
  };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
     << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' ' << height
     << "\">\n";
  os << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "  <line x1=\"" << ml << "\" y1=\"" << height - mb << "\" x2=\"" << width - mr
     << "\" y2=\"" << height - mb << "\" stroke=\"black\"/>\n";
  os << "  <line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\""
     << height - mb << "\" stroke=\"black\"/>\n";
  for (int t = 0; t <= 4; ++t) {
    const double r = R * t / 4.0;
    const double y = ymax / 1.05 * t / 4.0;
    os << "  <text x=\"" << X(r) << "\" y=\"" << height - mb + 18
       << "\" font-size=\"12\" text-anchor=\"middle\">" << r << "</text>\n";
    os << "  <text x=\"" << ml - 8 << "\" y=\"" << Y(y) + 4
       << "\" font-size=\"12\" text-anchor=\"end\">" << y << "</text>\n";
  }
  os << "  <text x=\"" << (ml + width - mr) / 2 << "\" y=\"" << height - 8
     << "\" font-size=\"13\" text-anchor=\"middle\">r</text>\n";
  os << polyline(u, "#1f77b4");
  os << polyline(v, "#d62728");
  os << "  <text x=\"" << width - mr - 10 << "\" y=\"" << mt + 16
     << "\" font-size=\"13\" text-anchor=\"end\" fill=\"#1f77b4\">u</text>\n";
  os << "  <text x=\"" << width - mr - 10 << "\" y=\"" << mt + 34
     << "\" font-size=\"13\" text-anchor=\"end\" fill=\"#d62728\">v</text>\n";
  os << "</svg>\n";
  return os.str();
}

void write_file(const std::string& path, const std::string& contents) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) {
    std::filesystem::create_directories(p.parent_path());
  }
  std::ofstream out(p, std::ios::binary);
  if (!out) throw solver_error("cannot write '" + path + "'");
  out << contents;
}

}  // namespace efsolve
