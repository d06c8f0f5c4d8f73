/*
 * Copyright 2026 The linkrank Authors.
 * SPDX-License-Identifier: Apache-2.0
 */
// Text, JSON and CSV renderings of library results for the command line.

#ifndef LINKRANK_TOOLS_RENDER_HPP
#define LINKRANK_TOOLS_RENDER_HPP

#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "linkrank/linkrank.hpp"

namespace linkrank::cli {

enum class Format { text, json, csv };

using Json = nlohmann::json;

// Exact integers become JSON numbers when they fit in 64 bits, decimal
// strings otherwise.
inline Json to_json(const ExactInt& v) {
  if (fits_int64(v)) return static_cast<std::int64_t>(v);
  return to_string(v);
}

inline Json to_json(std::span<const std::int64_t> xs) {
  Json arr = Json::array();
  for (std::int64_t x : xs) arr.push_back(x);
  return arr;
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

inline std::string join(std::span<const std::int64_t> xs, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(xs[i]);
  }
  return out;
}

inline std::string subset_key(const ComponentSubset& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i] + 1);
  }
  return out;
}

inline Json contributions_json(const std::vector<Contribution>& cs) {
  Json arr = Json::array();
  for (const Contribution& c : cs) {
    arr.push_back({{"multidegree", to_json(c.multidegree.coords())}, {"multiplicity", to_json(c.multiplicity)}});
  }
  return arr;
}

inline Json decomposition_json(const std::map<ComponentSubset, ExactInt>& parts) {
  Json obj = Json::object();
  for (const auto& [s, v] : parts) obj[subset_key(s)] = to_json(v);
  return obj;
}

inline std::string bool_str(bool b) { return b ? "true" : "false"; }

// ---- rank -----------------------------------------------------------------

inline std::string render_rank(const LinkProblem& lp, const RankReport& rep, bool details, Format f) {
  if (f == Format::json) {
    Json j;
    j["m"] = lp.m();
    j["p"] = to_json(lp.dims());
    j["rank"] = to_json(rep.total_rank);
    if (rep.brunnian_rank) j["brunnian_rank"] = to_json(*rep.brunnian_rank);
    j["infinite"] = rep.infinite;
    j["contributions"] = contributions_json(rep.contributions);
    if (details && rep.subset_decomposition) j["decomposition"] = decomposition_json(*rep.subset_decomposition);
    return dump(j);
  }
  if (f == Format::csv) {
    std::string out = "m,p,rank,brunnian_rank,infinite\n";
    out += std::to_string(lp.m()) + "," + join(lp.dims(), " ") + "," + to_string(rep.total_rank) + "," +
           (rep.brunnian_rank ? to_string(*rep.brunnian_rank) : "") + "," + bool_str(rep.infinite) + "\n";
    return out;
  }
  std::ostringstream os;
  os << "m = " << lp.m() << ", p = (" << join(lp.dims(), ", ") << ")\n";
  os << "rank: " << rep.total_rank << "\n";
  if (rep.brunnian_rank) os << "brunnian rank: " << *rep.brunnian_rank << "\n";
  os << "infinite: " << bool_str(rep.infinite) << "\n";
  if (details) {
    os << "contributions:\n";
    for (const Contribution& c : rep.contributions) os << "  " << c.multidegree.str() << "  " << c.multiplicity << "\n";
    if (rep.subset_decomposition) {
      os << "decomposition:\n";
      for (const auto& [s, v] : *rep.subset_decomposition) os << "  {" << subset_key(s) << "}  " << v << "\n";
    }
  }
  return os.str();
}

inline std::string render_brunnian(const LinkProblem& lp, const BrunnianRank& br, bool infinite, bool details,
                                   Format f) {
  if (f == Format::json) {
    Json j;
    j["m"] = lp.m();
    j["p"] = to_json(lp.dims());
    j["rank"] = to_json(br.rank);
    j["brunnian_rank"] = to_json(br.rank);
    j["infinite"] = infinite;
    j["contributions"] = contributions_json(br.contributions);
    return dump(j);
  }
  if (f == Format::csv) {
    return "m,p,rank,brunnian_rank,infinite\n" + std::to_string(lp.m()) + "," + join(lp.dims(), " ") + "," +
           to_string(br.rank) + "," + to_string(br.rank) + "," + bool_str(infinite) + "\n";
  }
  std::ostringstream os;
  os << "m = " << lp.m() << ", p = (" << join(lp.dims(), ", ") << ")\n";
  os << "brunnian rank: " << br.rank << "\n";
  os << "infinite: " << bool_str(infinite) << "\n";
  if (details) {
    os << "contributions:\n";
    for (const Contribution& c : br.contributions) os << "  " << c.multidegree.str() << "  " << c.multiplicity << "\n";
  }
  return os.str();
}

// ---- framed ---------------------------------------------------------------

inline std::string render_framed(const FramedLinkProblem& fp, const FramedRankReport& rep, bool details, Format f) {
  std::vector<std::int64_t> ls;
  for (const FramedComponent& c : fp.components()) ls.push_back(c.l);
  std::vector<std::int64_t> stiefel(rep.stiefel_ranks.begin(), rep.stiefel_ranks.end());
  const LinkProblem& lp = fp.link();

  if (f == Format::json) {
    Json j;
    j["m"] = fp.m();
    j["p"] = to_json(lp.dims());
    j["l"] = to_json(ls);
    j["rank"] = to_json(rep.total_rank);
    j["link_rank"] = to_json(rep.link.total_rank);
    if (rep.link.brunnian_rank) j["brunnian_rank"] = to_json(*rep.link.brunnian_rank);
    j["stiefel_ranks"] = to_json(stiefel);
    j["infinite"] = rep.infinite;
    j["contributions"] = contributions_json(rep.link.contributions);
    if (details && rep.link.subset_decomposition) {
      j["decomposition"] = decomposition_json(*rep.link.subset_decomposition);
    }
    return dump(j);
  }
  if (f == Format::csv) {
    return "m,p,l,rank,link_rank,stiefel_ranks,infinite\n" + std::to_string(fp.m()) + "," + join(lp.dims(), " ") + "," +
           join(ls, " ") + "," + to_string(rep.total_rank) + "," + to_string(rep.link.total_rank) + "," +
           join(stiefel, " ") + "," + bool_str(rep.infinite) + "\n";
  }
  std::ostringstream os;
  os << "m = " << fp.m() << ", p = (" << join(lp.dims(), ", ") << "), l = (" << join(ls, ", ") << ")\n";
  os << "rank: " << rep.total_rank << "\n";
  os << "link rank: " << rep.link.total_rank << "\n";
  os << "stiefel ranks: " << join(stiefel, " ") << "\n";
  os << "infinite: " << bool_str(rep.infinite) << "\n";
  if (details) {
    os << "contributions:\n";
    for (const Contribution& c : rep.link.contributions) {
      os << "  " << c.multidegree.str() << "  " << c.multiplicity << "\n";
    }
  }
  return os.str();
}

// ---- tables ---------------------------------------------------------------

inline std::string render_table2(Format f) {
  const std::vector<Table2Cell> cells = table2();
  if (f == Format::json) {
    Json arr = Json::array();
    for (const Table2Cell& c : cells) {
      arr.push_back({{"p", c.p}, {"l", c.l.label()}, {"k", c.k.label()}, {"rank", to_json(c.rank)}});
    }
    return dump(arr);
  }
  if (f == Format::csv) {
    std::string out = "p,l,k,rank\n";
    for (const Table2Cell& c : cells) {
      out += std::to_string(c.p) + "," + c.l.label() + "," + c.k.label() + "," + to_string(c.rank) + "\n";
    }
    return out;
  }
  // Grid: one column per (p, l), one line per k.
  std::ostringstream os;
  const std::vector<TableIndex> rows = table2_rows();
  os << "Brunnian ranks of S^p, S^(p+k) in S^(p+l+k)\n";
  os << "p    |";
  for (std::int64_t p = 1; p <= kTable2MaxP; ++p) {
    for (std::size_t c = 0; c < table2_columns(p).size(); ++c) os << "    " << p;
  }
  os << "\nl    |";
  for (std::int64_t p = 1; p <= kTable2MaxP; ++p) {
    for (const TableIndex& l : table2_columns(p)) os << " " << std::string(4 - l.label().size(), ' ') << l.label();
  }
  os << "\n";
  for (const TableIndex& k : rows) {
    const std::string label = "k=" + k.label();
    os << label << std::string(5 - label.size(), ' ') << "|";
    for (const Table2Cell& c : cells) {
      if (c.k.value != k.value) continue;
      const std::string v = to_string(c.rank);
      os << " " << std::string(4 - std::min<std::size_t>(4, v.size()), ' ') << v;
    }
    os << "\n";
  }
  return os.str();
}

inline std::string render_table3(Format f) {
  const std::vector<Table3Block> blocks = table3();
  if (f == Format::json) {
    Json arr = Json::array();
    for (const Table3Block& b : blocks) {
      Json rows = Json::array();
      for (std::size_t y = 0; y < 5; ++y) {
        Json row = Json::array();
        for (std::size_t x = 0; x < 5; ++x) row.push_back(to_json(b.values[y][x]));
        rows.push_back(row);
      }
      arr.push_back({{"i", to_string(b.parities.i)}, {"j", to_string(b.parities.j)}, {"m", rows}});
    }
    return dump(arr);
  }
  if (f == Format::csv) {
    std::string out = "i,j,x,y,multiplicity\n";
    for (const Table3Block& b : blocks) {
      for (std::int64_t y = 1; y <= 5; ++y) {
        for (std::int64_t x = 1; x <= 5; ++x) {
          out += std::string(to_string(b.parities.i)) + "," + to_string(b.parities.j) + "," + std::to_string(x) + "," +
                 std::to_string(y) + "," + to_string(b.values[y - 1][x - 1]) + "\n";
        }
      }
    }
    return out;
  }
  std::ostringstream os;
  for (const Table3Block& b : blocks) {
    os << "m(x,y) for i " << to_string(b.parities.i) << ", j " << to_string(b.parities.j) << "\n";
    for (std::int64_t y = 5; y >= 1; --y) {
      os << "  y=" << y << " |";
      for (std::int64_t x = 1; x <= 5; ++x) os << " " << b.values[y - 1][x - 1];
      os << "\n";
    }
    os << "       +----------\n        x=1 2 3 4 5\n\n";
  }
  return os.str();
}

// ---- small commands --------------------------------------------------------

inline std::string render_fcs(ParityPair pp, const std::vector<std::pair<std::int64_t, std::int64_t>>& pts, Format f) {
  if (f == Format::json) {
    Json arr = Json::array();
    for (const auto& [x, y] : pts) arr.push_back(Json::array({x, y}));
    Json j;
    j["i"] = to_string(pp.i);
    j["j"] = to_string(pp.j);
    j["points"] = arr;
    return dump(j);
  }
  std::string out = f == Format::csv ? "x,y\n" : "";
  for (const auto& [x, y] : pts) {
    out += f == Format::csv ? std::to_string(x) + "," + std::to_string(y) + "\n"
                            : "(" + std::to_string(x) + "," + std::to_string(y) + ")\n";
  }
  return out;
}

inline std::string render_scalar(const std::vector<std::pair<std::string, Json>>& inputs, const std::string& name,
                                 const Json& value, Format f) {
  if (f == Format::json) {
    Json j;
    for (const auto& [k, v] : inputs) j[k] = v;
    j[name] = value;
    return dump(j);
  }
  auto plain = [](const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (!v.is_array()) return v.dump();
    std::string out;
    for (const Json& e : v) out += (out.empty() ? "" : " ") + e.dump();
    return out;
  };
  if (f == Format::csv) {
    std::string head;
    std::string row;
    for (const auto& [k, v] : inputs) {
      head += k + ",";
      row += plain(v) + ",";
    }
    return head + name + "\n" + row + plain(value) + "\n";
  }
  return plain(value) + "\n";
}

inline std::string render_verify(const oracle::VerifyReport& rep, Format f) {
  if (f == Format::json) {
    Json fails = Json::array();
    for (const oracle::VerifyFailure& x : rep.failures) {
      fails.push_back({{"weights", to_json(x.instance.weights)},
                       {"multidegree", to_json(x.instance.multidegree.coords())},
                       {"quantity", x.quantity},
                       {"expected", to_json(x.expected)},
                       {"actual", to_json(x.actual)}});
    }
    Json j;
    j["instances"] = rep.instances;
    j["dim_checks"] = rep.dim_checks;
    j["map_checks"] = rep.map_checks;
    j["failures"] = fails;
    j["pass"] = rep.all_pass();
    return dump(j);
  }
  if (f == Format::csv) {
    std::string out = "weights,multidegree,quantity,expected,actual\n";
    for (const oracle::VerifyFailure& x : rep.failures) {
      out += join(x.instance.weights, " ") + "," + join(x.instance.multidegree.coords(), " ") + "," + x.quantity + "," +
             to_string(x.expected) + "," + to_string(x.actual) + "\n";
    }
    return out;
  }
  std::ostringstream os;
  for (const oracle::VerifyFailure& x : rep.failures) {
    os << "FAIL weights (" << join(x.instance.weights, ",") << ") x " << x.instance.multidegree.str() << " "
       << x.quantity << ": expected " << x.expected << ", oracle " << x.actual << "\n";
  }
  os << rep.summary() << " (" << rep.dim_checks << " dimension checks, " << rep.map_checks << " map checks)\n";
  return os.str();
}

inline std::string render_handlebody(const HandlebodyReport& rep, Format f) {
  if (f == Format::json) {
    Json j;
    j["m"] = rep.m;
    j["p"] = to_json(rep.dims);
    j["weak_conditions"] = rep.weak_conditions;
    j["strict_conditions"] = rep.strict_conditions;
    j["codimension_valid"] = rep.codimension_valid;
    j["thickening_set"] = to_string(rep.thickening_set);
    j["handlebody_set"] = to_string(rep.handlebody_set);
    if (rep.group_rank) j["group_rank"] = to_json(*rep.group_rank);
    return dump(j);
  }
  if (f == Format::csv) {
    return "m,p,weak_conditions,strict_conditions,thickening_set,handlebody_set,group_rank\n" + std::to_string(rep.m) +
           "," + join(rep.dims, " ") + "," + bool_str(rep.weak_conditions) + "," + bool_str(rep.strict_conditions) +
           "," + to_string(rep.thickening_set) + "," + to_string(rep.handlebody_set) + "," +
           (rep.group_rank ? to_string(*rep.group_rank) : "") + "\n";
  }
  std::ostringstream os;
  os << "m = " << rep.m << ", p = (" << join(rep.dims, ", ") << ")\n";
  os << "weak conditions: " << bool_str(rep.weak_conditions) << "\n";
  os << "strict conditions: " << bool_str(rep.strict_conditions) << "\n";
  os << "thickenings: " << to_string(rep.thickening_set) << "\n";
  os << "handlebodies: " << to_string(rep.handlebody_set) << "\n";
  if (rep.group_rank) os << "group rank: " << *rep.group_rank << "\n";
  return os.str();
}

}  // namespace linkrank::cli

#endif  // LINKRANK_TOOLS_RENDER_HPP
