#include "gsp4/tables.hpp"

#include <sstream>
#include <stdexcept>

#include "gsp4/rootdata.hpp"

namespace gsp4 {

namespace {

std::string join(const std::set<int>& s) {
  std::string out = "{";
  for (int i : s) out += (out.size() > 1 ? "," : "") + std::to_string(i);
  return out + "}";
}

}  // namespace

TableRange parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw std::invalid_argument("range must look like lo..hi, got '" + text + "'");
  TableRange r;
  try {
    r.lo = std::stoll(text.substr(0, dots));
    r.hi = std::stoll(text.substr(dots + 2));
  } catch (const std::exception&) {
    throw std::invalid_argument("range must look like lo..hi, got '" + text + "'");
  }
  if (r.lo > r.hi) throw std::invalid_argument("empty range '" + text + "'");
  return r;
}

std::string make_table(const std::string& name, TableRange range, std::int64_t p) {
  std::ostringstream os;
  if (name == "weights") {
    os << "a,b,chambers,class,lds_family,vanishing_p" << p << "\n";
    for (auto a = range.lo; a <= range.hi; ++a)
      for (auto b = range.lo; b <= range.hi; ++b) {
        const ChamberInfo info = chamber_classify(a, b);
        std::string ch, fam;
        for (int c : info.chambers) ch += (ch.empty() ? "C" : " C") + std::to_string(c);
        for (int f : lds_families(a, b)) fam += (fam.empty() ? "" : " ") + std::to_string(f);
        os << a << "," << b << "," << ch << "," << to_string(info.cls) << "," << fam << ","
           << join(lan_suh_vanishing(a, b, p)) << "\n";
      }
  } else if (name == "vanishing") {
    os << "a,b,vanishing_p" << p << "\n";
    for (auto a = range.lo; a <= range.hi; ++a)
      for (auto b = range.lo; b <= range.hi; ++b) os << a << "," << b << "," << join(lan_suh_vanishing(a, b, p)) << "\n";
  } else if (name == "serre") {
    os << "a,b,dual_a,dual_b,fixed\n";
    for (auto a = range.lo; a <= range.hi; ++a)
      for (auto b = range.lo; b <= range.hi; ++b) {
        const auto d = serre_dual_weight(a, b);
        os << a << "," << b << "," << d.first << "," << d.second << "," << (d == std::pair{a, b} ? "yes" : "no")
           << "\n";
      }
  } else if (name == "selmer") {
    if (range.lo < 0) throw std::invalid_argument("selmer table needs a nonnegative range");
    os << "dual_dim,nQ,tangent_dim,ledger\n";
    for (auto d = range.lo; d <= range.hi; ++d)
      for (auto n = range.lo; n <= range.hi; ++n)
        os << d << "," << n << "," << gw_tangent_dim(d, n) << "," << gw_tangent_dim_ledger(d, n) << "\n";
  } else {
    throw std::invalid_argument("unknown table '" + name + "' (weights, vanishing, serre, selmer)");
  }
  return os.str();
}

}  // namespace gsp4
