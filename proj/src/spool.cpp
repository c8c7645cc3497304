#include <omp.h>

#include <algorithm>
#include <exception>
#include <fstream>
#include <set>

#include "generator.hpp"
#include "treeopt/enumeration.hpp"
#include "treeopt/errors.hpp"
#include "treeopt/graph6.hpp"
#include "treeopt/kernels.hpp"

namespace treeopt {

namespace {

const std::string kHeader = "treeopt-checkpoint 1 ";

std::set<std::string> read_checkpoint(const std::string& path, const std::string& class_name, bool& exists) {
  std::set<std::string> done;
  std::ifstream in(path);
  exists = static_cast<bool>(in);
  if (!exists) return done;
  std::string line;
  if (!std::getline(in, line)) {
    exists = false;
    return done;
  }
  if (line != kHeader + class_name) {
    throw ArgumentError("checkpoint " + path + " belongs to a different class: " + line);
  }
  while (std::getline(in, line)) {
    if (line.rfind("done ", 0) == 0) done.insert(line.substr(5));
  }
  return done;
}

void normalize_output(const std::string& out_path, std::size_t& size) {
  std::vector<std::string> lines;
  {
    std::ifstream in(out_path);
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty()) lines.push_back(line);
    }
  }
  std::sort(lines.begin(), lines.end());
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
  std::ofstream out(out_path, std::ios::trunc);
  for (const auto& l : lines) out << l << '\n';
  size = lines.size();
}

}  // namespace

SpoolResult spool_class(const GraphClassSpec& spec, const std::string& out_path,
                        const std::string& checkpoint_path, const EnumOptions& opts) {
  GraphClassSpec s = spec;
  s.caps = opts.caps;
  SpoolResult result;

  if (s.kind == ClassKind::AlmostRegular || s.kind == ClassKind::Ladder) {
    std::ofstream out(out_path, std::ios::trunc);
    for (const Graph& g : class_members(s, opts.workers)) out << to_graph6(g) << '\n';
    out.close();
    normalize_output(out_path, result.class_size);
    return result;
  }

  const detail::ClassPlan plan = detail::plan_for(s);
  result.parity_warning = plan.parity_warning;
  bool resumed = false;
  const std::set<std::string> done = read_checkpoint(checkpoint_path, s.describe(), resumed);
  if (!resumed) {
    std::ofstream(out_path, std::ios::trunc).close();
    std::ofstream(checkpoint_path, std::ios::trunc) << kHeader << s.describe() << '\n';
  }
  if (plan.empty) {
    normalize_output(out_path, result.class_size);
    return result;
  }

  const detail::Generator gen(plan.mode, s.n, plan.target);
  const std::vector<detail::SmallGraph> units = gen.frontier();
  std::vector<std::string> unit_ids(units.size());
  std::vector<std::size_t> pending;
  for (std::size_t i = 0; i < units.size(); ++i) {
    unit_ids[i] = gen.code_of(units[i]);
    if (done.count(unit_ids[i])) {
      ++result.units_resumed;
    } else {
      pending.push_back(i);
    }
  }
  result.units_total = units.size();

  std::ofstream out(out_path, std::ios::app);
  std::ofstream ckpt(checkpoint_path, std::ios::app);
  std::exception_ptr failure;
  const long long count = static_cast<long long>(pending.size());
#pragma omp parallel for schedule(dynamic, 1) num_threads(clamp_workers(opts.workers))
  for (long long p = 0; p < count; ++p) {
    try {
      const std::size_t i = pending[p];
      std::string block;
      for (const auto& code : gen.expand(units[i])) block += plan.finish(code) + '\n';
#pragma omp critical(treeopt_spool_write)
      {
        out << block << std::flush;
        ckpt << "done " << unit_ids[i] << '\n' << std::flush;
      }
    } catch (...) {
#pragma omp critical(treeopt_spool_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  out.close();
  ckpt.close();
  normalize_output(out_path, result.class_size);
  return result;
}

}  // namespace treeopt
