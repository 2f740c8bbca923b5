#include "gdcage/catalog.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#ifdef GDCAGE_HAVE_OPENSSL
#define CPPHTTPLIB_OPENSSL_SUPPORT
#endif
#include <httplib.h>
#include <json.hpp>

#include "gdcage/graph6.hpp"

namespace gdcage {

namespace {

const char* kColumns[] = {"k",         "g",
                          "d",         "lower_bound",
                          "order",     "count",
                          "exhaustive", "all_bipartite",
                          "runtime_seconds", "graph_file"};

std::string opt_int(const std::optional<std::int64_t>& v) {
  return v ? std::to_string(*v) : "-";
}

std::string opt_bool(const std::optional<bool>& v) {
  if (!v) return "-";
  return *v ? "yes" : "no";
}

void check_invariants(const CageRecord& r) {
  if (r.order && *r.order < r.lower_bound)
    throw std::invalid_argument("catalog: order below lower bound");
  if (r.order && r.count && *r.count < 1)
    throw std::invalid_argument("catalog: resolved order needs count >= 1");
}

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, '\t')) out.push_back(field);
  return out;
}

}  // namespace

std::string catalog_header() {
  std::string out;
  for (const char* c : kColumns) {
    if (!out.empty()) out += '\t';
    out += c;
  }
  return out;
}

std::string format_record(const CageRecord& r) {
  check_invariants(r);
  std::ostringstream out;
  out << r.k << '\t' << r.g << '\t' << r.d << '\t' << r.lower_bound << '\t'
      << opt_int(r.order) << '\t' << opt_int(r.count) << '\t'
      << (r.exhaustive ? "yes" : "no") << '\t' << opt_bool(r.all_bipartite)
      << '\t' << std::fixed << std::setprecision(3) << r.runtime_seconds
      << '\t' << (r.graph_file.empty() ? "-" : r.graph_file);
  return out.str();
}

CageRecord parse_record(const std::string& line) {
  std::vector<std::string> f = split_tabs(line);
  if (f.size() != std::size(kColumns))
    throw std::invalid_argument("catalog: wrong field count");
  CageRecord r;
  r.k = std::stoi(f[0]);
  r.g = std::stoi(f[1]);
  r.d = std::stoi(f[2]);
  r.lower_bound = std::stoll(f[3]);
  if (f[4] != "-") r.order = std::stoll(f[4]);
  if (f[5] != "-") r.count = std::stoll(f[5]);
  if (f[6] != "yes" && f[6] != "no")
    throw std::invalid_argument("catalog: bad exhaustive flag");
  r.exhaustive = f[6] == "yes";
  if (f[7] != "-") {
    if (f[7] != "yes" && f[7] != "no")
      throw std::invalid_argument("catalog: bad bipartite flag");
    r.all_bipartite = f[7] == "yes";
  }
  r.runtime_seconds = std::stod(f[8]);
  if (f[9] != "-") r.graph_file = f[9];
  check_invariants(r);
  return r;
}

std::vector<CageRecord> read_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("catalog: cannot open " + path);
  std::vector<CageRecord> out;
  std::string line;
  if (!std::getline(in, line)) return out;
  if (line != catalog_header())
    throw std::invalid_argument("catalog: bad header in " + path);
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    out.push_back(parse_record(line));
  }
  return out;
}

void append_record(const std::string& path, const CageRecord& rec) {
  const std::string line = format_record(rec);  // validates first
  const bool fresh = !std::filesystem::exists(path);
  std::ofstream out(path, std::ios::app);
  if (!out) throw std::invalid_argument("catalog: cannot write " + path);
  if (fresh) out << catalog_header() << '\n';
  out << line << '\n';
}

std::string cage_file_name(int k, int g, int d, std::int64_t n) {
  std::ostringstream out;
  out << "cages_k" << k << "_g" << g << "_d" << d << "_n" << n << ".g6";
  return out.str();
}

namespace {

void sort_rows(std::vector<CageRecord>& rows) {
  std::sort(rows.begin(), rows.end(), [](const CageRecord& a,
                                         const CageRecord& b) {
    return std::tie(a.k, a.g, a.d) < std::tie(b.k, b.g, b.d);
  });
}

std::string order_cell(const CageRecord& r) {
  if (r.order) return std::to_string(*r.order);
  return r.exhaustive ? "none" : "unresolved";
}

std::string count_cell(const CageRecord& r) {
  if (!r.count) return "-";
  if (r.exhaustive) return std::to_string(*r.count);
  return ">=" + std::to_string(*r.count);
}

std::string runtime_cell(const CageRecord& r) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(3) << r.runtime_seconds;
  return out.str();
}

}  // namespace

std::string render_table_csv(std::vector<CageRecord> rows) {
  sort_rows(rows);
  std::string out = "k,g,d,M,n,cages,all_bipartite,runtime_seconds\n";
  for (const CageRecord& r : rows) {
    out += std::to_string(r.k) + ',' + std::to_string(r.g) + ',' +
           std::to_string(r.d) + ',' + std::to_string(r.lower_bound) + ',' +
           order_cell(r) + ',' + count_cell(r) + ',' +
           opt_bool(r.all_bipartite) + ',' + runtime_cell(r) + '\n';
  }
  return out;
}

std::string render_table_text(std::vector<CageRecord> rows) {
  sort_rows(rows);
  const char* headers[] = {"k", "g",     "d",         "M",      "n",
                           "cages", "bipartite", "runtime"};
  std::vector<std::vector<std::string>> cells;
  for (const CageRecord& r : rows)
    cells.push_back({std::to_string(r.k), std::to_string(r.g),
                     std::to_string(r.d), std::to_string(r.lower_bound),
                     order_cell(r), count_cell(r), opt_bool(r.all_bipartite),
                     runtime_cell(r)});
  size_t width[8];
  for (int c = 0; c < 8; ++c) {
    width[c] = std::string(headers[c]).size();
    for (const auto& row : cells) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  for (int c = 0; c < 8; ++c)
    out << (c ? "  " : "") << std::setw(static_cast<int>(width[c]))
        << headers[c];
  out << '\n';
  for (const auto& row : cells) {
    for (int c = 0; c < 8; ++c)
      out << (c ? "  " : "") << std::setw(static_cast<int>(width[c])) << row[c];
    out << '\n';
  }
  return out.str();
}

std::optional<Graph> fetch_reference_graph(int id, const std::string& cache_dir,
                                           std::string* error) {
  auto fail = [&](const std::string& why) -> std::optional<Graph> {
    if (error) *error = why;
    return std::nullopt;
  };
  std::filesystem::create_directories(cache_dir);
  const std::filesystem::path cached =
      std::filesystem::path(cache_dir) / ("hog_" + std::to_string(id) + ".g6");
  std::string payload;
  if (std::filesystem::exists(cached)) {
    std::ifstream in(cached);
    std::getline(in, payload);
  } else {
#ifdef GDCAGE_HAVE_OPENSSL
    httplib::SSLClient client("houseofgraphs.org");
#else
    httplib::Client client("houseofgraphs.org", 80);
#endif
    client.set_connection_timeout(5);
    client.set_read_timeout(10);
    auto res = client.Get("/api/graphs/" + std::to_string(id));
    if (!res || res->status != 200)
      return fail("download failed for id " + std::to_string(id));
    try {
      auto doc = nlohmann::json::parse(res->body);
      payload = doc.at("graphString").get<std::string>();
    } catch (const std::exception& e) {
      return fail(std::string("bad response body: ") + e.what());
    }
    // strip any trailing newline before caching
    while (!payload.empty() && (payload.back() == '\n' || payload.back() == '\r'))
      payload.pop_back();
    std::ofstream out(cached);
    out << payload << '\n';
  }
  try {
    return graph6_decode(payload);
  } catch (const std::exception& e) {
    std::filesystem::remove(cached);  // drop a corrupt cache entry
    return fail(std::string("graph6 decode failed: ") + e.what());
  }
}

}  // namespace gdcage
