#include "coverbound/sdpa_io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace coverbound {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void write_sdpa(const SdpProblem& p, std::ostream& out) {
  validate(p);
  const bool maximize = (p.sense == SdpProblem::Sense::Max);
  int nflag = 0;
  for (auto f : p.nonneg) nflag += (f != 0);

  out << "\"LMI export";
  if (maximize) out << "; objective negated (max problem), optimum = -reported";
  out << "\n";
  out << p.num_vars << " = mDIM\n";
  out << (p.blocks.size() + (nflag ? 1 : 0)) << " = nBLOCK\n";
  for (std::size_t b = 0; b < p.blocks.size(); ++b)
    out << (b ? " " : "") << p.blocks[b].dim;
  if (nflag) out << (p.blocks.empty() ? "" : " ") << -nflag;
  out << " = bLOCKsTRUCT\n";
  for (int i = 0; i < p.num_vars; ++i) {
    double c = p.objective[static_cast<std::size_t>(i)];
    out << (i ? " " : "") << fmt(maximize ? -c : c);
  }
  out << "\n";

  // Constant matrix: the format subtracts F0, so emit the negated constant.
  for (std::size_t b = 0; b < p.blocks.size(); ++b) {
    const SymMatrix& f0 = p.blocks[b].constant;
    for (int i = 0; i < f0.dim(); ++i)
      for (int j = i; j < f0.dim(); ++j)
        if (f0(i, j) != 0.0)
          out << "0 " << (b + 1) << " " << (i + 1) << " " << (j + 1) << " "
              << fmt(-f0(i, j)) << "\n";
  }
  for (std::size_t b = 0; b < p.blocks.size(); ++b)
    for (const BlockTerm& t : p.blocks[b].terms)
      if (t.coeff != 0.0)
        out << (t.var + 1) << " " << (b + 1) << " " << (t.row + 1) << " "
            << (t.col + 1) << " " << fmt(t.coeff) << "\n";
  if (nflag) {
    int blk = static_cast<int>(p.blocks.size()) + 1;
    int pos = 1;
    for (int i = 0; i < p.num_vars; ++i)
      if (p.nonneg[static_cast<std::size_t>(i)]) {
        out << (i + 1) << " " << blk << " " << pos << " " << pos << " 1\n";
        ++pos;
      }
  }
}

void write_sdpa_file(const SdpProblem& p, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  write_sdpa(p, out);
}

}  // namespace coverbound
