#include "hooklab/census_io.hpp"

#include <fstream>
#include <limits>
#include <random>
#include <sstream>
#include <system_error>

#include "hooklab/errors.hpp"

namespace hooklab {

namespace fs = std::filesystem;

namespace {

nlohmann::json big_to_json(const BigInt& v) {
  if (v.fits_slong_p()) return static_cast<std::int64_t>(v.get_si());
  return v.get_str();
}

BigInt json_to_big(const nlohmann::json& j) {
  if (j.is_number_unsigned()) return BigInt(std::to_string(j.get<std::uint64_t>()));
  if (j.is_number_integer()) return BigInt(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) {
    BigInt v;
    if (v.set_str(j.get<std::string>(), 10) != 0) throw consistency_error("bad integer in sidecar");
    return v;
  }
  throw consistency_error("sidecar count is neither number nor string");
}

std::vector<BigInt> json_to_vector(const nlohmann::json& j, int n_max, const char* field) {
  if (!j.contains(field) || !j[field].is_array() || j[field].size() != static_cast<std::size_t>(n_max) + 1)
    throw consistency_error(std::string("sidecar field '") + field + "' missing or wrong length");
  std::vector<BigInt> out;
  for (const auto& v : j[field]) out.push_back(json_to_big(v));
  return out;
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::string census_csv(const HookCensus& c) {
  std::string out = "n,t,count\n";
  for (int n = 0; n <= c.n_max; ++n)
    for (int t = 1; t <= c.t_max; ++t)
      out += std::to_string(n) + "," + std::to_string(t) + "," + c.count(n, t).get_str() + "\n";
  return out;
}

nlohmann::json census_sidecar(const HookCensus& c) {
  nlohmann::json j;
  j["class"] = to_string(c.class_id);
  j["n_max"] = c.n_max;
  j["t_max"] = c.t_max;
  j["cardinality"] = nlohmann::json::array();
  j["total_hooks"] = nlohmann::json::array();
  for (const auto& v : c.cardinality) j["cardinality"].push_back(big_to_json(v));
  for (const auto& v : c.total_hooks) j["total_hooks"].push_back(big_to_json(v));
  j["generated_by"] = kVersion;
  return j;
}

HookCensus parse_census(const std::string& csv, const nlohmann::json& sidecar) {
  HookCensus c;
  try {
    const auto id = parse_class(sidecar.at("class").get<std::string>());
    if (!id) throw consistency_error("unknown class in sidecar");
    c.class_id = *id;
    c.n_max = sidecar.at("n_max").get<int>();
    c.t_max = sidecar.at("t_max").get<int>();
  } catch (const nlohmann::json::exception& e) {
    throw consistency_error(std::string("malformed sidecar: ") + e.what());
  }
  if (c.n_max < 0 || c.t_max < 1) throw consistency_error("sidecar bounds out of range");
  c.cardinality = json_to_vector(sidecar, c.n_max, "cardinality");
  c.total_hooks = json_to_vector(sidecar, c.n_max, "total_hooks");
  c.rows.assign(static_cast<std::size_t>(c.n_max) + 1, std::vector<BigInt>(static_cast<std::size_t>(c.t_max)));

  std::istringstream in(csv);
  std::string line;
  if (!std::getline(in, line) || line != "n,t,count") throw consistency_error("CSV header must be n,t,count");
  long rows = 0;
  while (std::getline(in, line)) {
    const auto a = line.find(',');
    const auto b = line.find(',', a == std::string::npos ? a : a + 1);
    if (a == std::string::npos || b == std::string::npos) throw consistency_error("malformed CSV row: " + line);
    int n = 0, t = 0;
    try {
      n = std::stoi(line.substr(0, a));
      t = std::stoi(line.substr(a + 1, b - a - 1));
    } catch (const std::exception&) {
      throw consistency_error("malformed CSV row: " + line);
    }
    if (n < 0 || n > c.n_max || t < 1 || t > c.t_max) throw consistency_error("CSV row outside bounds: " + line);
    BigInt v;
    if (v.set_str(line.substr(b + 1), 10) != 0) throw consistency_error("bad count in CSV row: " + line);
    c.rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(t - 1)] = v;
    ++rows;
  }
  if (rows != static_cast<long>(c.n_max + 1) * c.t_max) throw consistency_error("CSV row count does not match sidecar");
  return c;
}

fs::path sidecar_path(const fs::path& csv_path) {
  fs::path p = csv_path;
  if (p.has_extension()) return p.replace_extension(".json");
  return fs::path(p.string() + ".json");
}

void write_file_atomic(const fs::path& path, const std::string& contents) {
  const fs::path dir = path.has_parent_path() ? path.parent_path() : fs::path(".");
  fs::create_directories(dir);
  std::random_device rd;
  const fs::path tmp = dir / ("." + path.filename().string() + ".tmp" + std::to_string(rd()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << contents;
    out.flush();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw std::runtime_error("write failed for " + tmp.string());
    }
  }
  fs::rename(tmp, path);
}

void write_census(const HookCensus& c, const fs::path& csv_path) {
  const std::string csv = census_csv(c);
  const std::string json = census_sidecar(c).dump(2) + "\n";
  write_file_atomic(csv_path, csv);
  write_file_atomic(sidecar_path(csv_path), json);
}

HookCensus read_census(const fs::path& csv_path) {
  const std::string csv = read_file(csv_path);
  nlohmann::json side;
  try {
    side = nlohmann::json::parse(read_file(sidecar_path(csv_path)));
  } catch (const nlohmann::json::parse_error& e) {
    throw consistency_error(std::string("sidecar is not valid JSON: ") + e.what());
  }
  return parse_census(csv, side);
}

fs::path cache_path(const fs::path& dir, ClassId c) {
  return dir / ("census_" + std::string(to_string(c)) + ".csv");
}

std::optional<HookCensus> load_cached(const fs::path& dir, ClassId c) {
  const fs::path p = cache_path(dir, c);
  if (!fs::exists(p) || !fs::exists(sidecar_path(p))) return std::nullopt;
  try {
    HookCensus cached = read_census(p);
    if (cached.class_id != c) return std::nullopt;
    return cached;
  } catch (const consistency_error&) {
    return std::nullopt;  // unreadable cache entries are recomputed
  }
}

void store_cached(const fs::path& dir, const HookCensus& c) { write_census(c, cache_path(dir, c.class_id)); }

}  // namespace hooklab
