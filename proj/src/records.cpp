#include "starspec/records.hpp"

#include <fstream>
#include <string>

#include "starspec/error.hpp"

namespace starspec {

namespace {

template <class T>
nlohmann::json optional_json(const std::optional<T>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

template <class T>
std::optional<T> optional_field(const nlohmann::json& j, const char* key) {
  const auto& v = j.at(key);
  if (v.is_null()) return std::nullopt;
  return v.get<T>();
}

nlohmann::json row_json(const MarginRow& r) {
  return {{"graph6", r.graph6}, {"q", r.q}, {"margin", r.margin}};
}

}  // namespace

nlohmann::json to_json(const SearchRecord& rec) {
  return {
      {"n", rec.n},
      {"class", std::string(graph_class_name(rec.cls))},
      {"forest", rec.forest.to_string()},
      {"count_enumerated", rec.count_enumerated},
      {"count_f_free", rec.count_f_free},
      {"max_rho", rec.max_rho},
      {"argmax", rec.argmax},
      {"bound_value", optional_json(rec.bound_value)},
      {"bound_applicable", rec.bound_applicable},
      {"gap", optional_json(rec.gap)},
      {"family_graph6", optional_json(rec.family_graph6)},
      {"family_rho", optional_json(rec.family_rho)},
  };
}

SearchRecord search_record_from_json(const nlohmann::json& j) {
  try {
    SearchRecord rec;
    rec.n = j.at("n").get<int>();
    rec.cls = parse_graph_class(j.at("class").get<std::string>());
    rec.forest = StarForest::parse(j.at("forest").get<std::string>());
    rec.count_enumerated = j.at("count_enumerated").get<std::int64_t>();
    rec.count_f_free = j.at("count_f_free").get<std::int64_t>();
    rec.max_rho = j.at("max_rho").get<double>();
    rec.argmax = j.at("argmax").get<std::vector<std::string>>();
    rec.bound_value = optional_field<double>(j, "bound_value");
    rec.bound_applicable = j.at("bound_applicable").get<bool>();
    rec.gap = optional_field<double>(j, "gap");
    rec.family_graph6 = optional_field<std::string>(j, "family_graph6");
    rec.family_rho = optional_field<double>(j, "family_rho");
    return rec;
  } catch (const nlohmann::json::exception& e) {
    throw Error(Errc::parse_error, std::string("search record: ") + e.what());
  }
}

nlohmann::json to_json(const ConjectureReport& rep) {
  nlohmann::json top = nlohmann::json::array();
  for (const auto& r : rep.top) top.push_back(row_json(r));
  nlohmann::json exceeding = nlohmann::json::array();
  for (const auto& r : rep.exceeding) exceeding.push_back(row_json(r));
  return {
      {"n", rep.n},
      {"class", std::string(graph_class_name(rep.cls))},
      {"forest", rep.forest.to_string()},
      {"bound", rep.bound},
      {"count_f_free", rep.count_f_free},
      {"max_margin", rep.max_margin},
      {"top", top},
      {"exceeding", exceeding},
      {"family", rep.family ? row_json(*rep.family) : nlohmann::json(nullptr)},
  };
}

void write_records(std::span<const SearchRecord> records, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error(Errc::io_error, "cannot open " + path.string() + " for writing");
  for (const auto& rec : records) out << to_json(rec).dump() << '\n';
  if (!out) throw Error(Errc::io_error, "write failed on " + path.string());
}

std::vector<SearchRecord> read_records(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_error, "cannot open " + path.string());
  std::vector<SearchRecord> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(search_record_from_json(nlohmann::json::parse(line)));
    } catch (const nlohmann::json::exception& e) {
      throw Error(Errc::parse_error, path.string() + ":" + std::to_string(lineno) + ": " + e.what(), lineno);
    } catch (const Error& e) {
      throw Error(Errc::parse_error, path.string() + ":" + std::to_string(lineno) + ": " + e.what(), lineno);
    }
  }
  return out;
}

}  // namespace starspec
