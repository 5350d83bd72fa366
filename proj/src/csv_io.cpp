#include "dsrnet/csv_io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace dsr {

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    if (pos == std::string::npos) {
      out.push_back(line.substr(start));
      break;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

double parse_double(const std::string& token) {
  double value = 0.0;
  const auto* begin = token.data();
  const auto* end = begin + token.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end)
    throw std::runtime_error("csv: malformed numeric field '" + token + "'");
  return value;
}

}  // namespace

std::string format_value(double v) {
  char buffer[32];
  const auto [ptr, ec] =
      std::to_chars(buffer, buffer + sizeof(buffer), v,
                    std::chars_format::general, 15);
  if (ec != std::errc{}) throw std::runtime_error("csv: value formatting failed");
  return {buffer, ptr};
}

void write_trajectory_csv(std::ostream& out, const Trajectory& traj) {
  out << "t";
  for (int i = 1; i <= traj.agents(); ++i) out << ",agent_" << i;
  out << ",source\n";
  const int rows = static_cast<int>(traj.states.rows());
  for (int k = 0; k < rows; ++k) {
    out << format_value(traj.time_at(k));
    for (int i = 0; i < traj.agents(); ++i)
      out << ',' << format_value(traj.states(k, i));
    out << ',' << format_value(traj.source(k)) << '\n';
  }
}

Trajectory read_trajectory_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("csv: empty document");
  const auto header = split(line, ',');
  if (header.size() < 3 || header.front() != "t" || header.back() != "source")
    throw std::runtime_error("csv: unexpected trajectory header");
  const int n = static_cast<int>(header.size()) - 2;

  std::vector<double> times;
  std::vector<double> sources;
  std::vector<double> flat;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = split(line, ',');
    if (static_cast<int>(fields.size()) != n + 2)
      throw std::runtime_error("csv: row width mismatch");
    times.push_back(parse_double(fields.front()));
    for (int i = 0; i < n; ++i)
      flat.push_back(parse_double(fields[static_cast<std::size_t>(i) + 1]));
    sources.push_back(parse_double(fields.back()));
  }
  if (times.empty()) throw std::runtime_error("csv: no data rows");

  Trajectory traj;
  traj.delta_t = times.size() > 1 ? times[1] - times[0] : 0.0;
  const int rows = static_cast<int>(times.size());
  traj.states.resize(rows, n);
  traj.source.resize(rows);
  for (int k = 0; k < rows; ++k) {
    traj.source(k) = sources[static_cast<std::size_t>(k)];
    for (int i = 0; i < n; ++i)
      traj.states(k, i) = flat[static_cast<std::size_t>(k) * n + i];
  }
  return traj;
}

void write_formation_csv(std::ostream& out, const FormationTrace& trace) {
  out << "t";
  for (int i = 1; i <= trace.agents(); ++i) out << ",x_" << i << ",y_" << i;
  out << '\n';
  const int rows = static_cast<int>(trace.xs.rows());
  for (int k = 0; k < rows; ++k) {
    out << format_value(k * trace.delta_t);
    for (int i = 0; i < trace.agents(); ++i)
      out << ',' << format_value(trace.xs(k, i)) << ','
          << format_value(trace.ys(k, i));
    out << '\n';
  }
}

void write_sweep_csv(std::ostream& out, const SweepResult& sweep) {
  out << "gain,radius\n";
  for (std::size_t i = 0; i < sweep.grid.size(); ++i)
    out << format_value(sweep.grid[i]) << ',' << format_value(sweep.radii[i])
        << '\n';
}

}  // namespace dsr
