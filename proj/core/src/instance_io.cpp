#include "binestim/instance_io.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "binestim/errors.hpp"

namespace binestim {
namespace {

constexpr std::string_view kMagic = "binestim-v1";

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::vector<Rational> parse_list(const std::vector<std::string>& tokens, std::size_t line_no) {
  std::vector<Rational> out;
  out.reserve(tokens.size() - 1);
  for (std::size_t i = 1; i < tokens.size(); ++i) {
    try {
      out.push_back(Rational::parse(tokens[i]));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return out;
}

std::string join(std::string_view key, const std::vector<Rational>& values) {
  std::string out(key);
  for (const auto& v : values) {
    out += ' ';
    out += v.str();
  }
  return out;
}

}  // namespace

Instance parse_instance(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  bool seen_magic = false;
  std::optional<Rational> delta;
  std::optional<std::size_t> n;
  std::optional<std::vector<Rational>> announced;
  std::optional<std::vector<Rational>> actual;

  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line(raw);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const std::string& key = tokens.front();
    const std::string where = "line " + std::to_string(line_no) + ": ";

    if (!seen_magic) {
      if (key != kMagic || tokens.size() != 1) throw ParseError(where + "expected header '" + std::string(kMagic) + "'");
      seen_magic = true;
      continue;
    }
    if (key == "delta") {
      if (delta || tokens.size() != 2) throw ParseError(where + "expected a single 'delta p/q' record");
      delta = Rational::parse(tokens[1]);
    } else if (key == "n") {
      if (n || tokens.size() != 2) throw ParseError(where + "expected a single 'n <count>' record");
      try {
        std::size_t pos = 0;
        const long long v = std::stoll(tokens[1], &pos);
        if (pos != tokens[1].size() || v < 0) throw std::invalid_argument("n");
        n = static_cast<std::size_t>(v);
      } catch (const std::exception&) {
        throw ParseError(where + "n must be a non-negative integer");
      }
    } else if (key == "announce") {
      if (announced) throw ParseError(where + "duplicate 'announce' record");
      announced = parse_list(tokens, line_no);
    } else if (key == "actual") {
      if (actual) throw ParseError(where + "duplicate 'actual' record");
      actual = parse_list(tokens, line_no);
    } else {
      throw ParseError(where + "unknown record '" + key + "'");
    }
  }

  if (!seen_magic) throw ParseError("missing header '" + std::string(kMagic) + "'");
  if (!delta) throw ParseError("missing 'delta' record");
  if (!n) throw ParseError("missing 'n' record");
  if (!announced) announced.emplace();
  if (announced->size() != *n) {
    throw ParseError("n is " + std::to_string(*n) + " but " + std::to_string(announced->size()) +
                     " sizes are announced");
  }
  if (actual && actual->size() != *n) {
    throw ParseError("n is " + std::to_string(*n) + " but " + std::to_string(actual->size()) +
                     " actual sizes are given");
  }
  Instance inst{Announcement(*delta, std::move(*announced)), {}};
  if (actual) {
    for (std::size_t i = 0; i < actual->size(); ++i) {
      if (!validate_actual(inst.announcement[i], inst.announcement.delta(), (*actual)[i])) {
        throw BadParameter("actual size " + (*actual)[i].str() + " of item " + std::to_string(i) +
                           " lies outside the band of " + inst.announcement[i].str());
      }
    }
    inst.actual = std::move(*actual);
  }
  return inst;
}

std::string render_instance(const Instance& instance) {
  std::vector<Rational> announced(instance.announcement.sizes().begin(), instance.announcement.sizes().end());
  std::string out;
  out += kMagic;
  out += "\ndelta " + instance.announcement.delta().str();
  out += "\nn " + std::to_string(instance.announcement.size());
  out += "\n" + join("announce", announced);
  if (!instance.actual.empty()) out += "\n" + join("actual", instance.actual);
  out += "\n";
  return out;
}

Instance read_instance_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw BadParameter("cannot open instance file '" + path.string() + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

void write_instance_file(const std::filesystem::path& path, const Instance& instance) {
  std::ofstream out(path);
  if (!out) throw BadParameter("cannot write instance file '" + path.string() + "'");
  out << render_instance(instance);
}

std::string transcript_to_json(const Transcript& t, int indent) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["algorithm"] = t.algorithm;
  j["delta"] = t.announcement.delta().str();
  j["announced"] = ordered_json::array();
  for (const auto& a : t.announcement.sizes()) j["announced"].push_back(a.str());
  j["actual"] = ordered_json::array();
  j["placements"] = ordered_json::array();
  for (const auto& s : t.steps) {
    j["actual"].push_back(s.item.actual.str());
    j["placements"].push_back(s.bin);
  }
  j["bins"] = ordered_json::array();
  for (const auto& bin : t.final_state.bins()) j["bins"].push_back(bin.items);
  j["counters"] = ordered_json::object();
  for (const auto& [k, v] : t.counters) j["counters"][k] = v;
  return j.dump(indent);
}

Transcript transcript_from_json(std::string_view json) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid transcript JSON: ") + e.what());
  }
  try {
    std::vector<Rational> announced;
    for (const auto& a : j.at("announced")) announced.push_back(Rational::parse(a.get<std::string>()));
    Transcript t;
    t.algorithm = j.value("algorithm", "");
    t.announcement = Announcement(Rational::parse(j.at("delta").get<std::string>()), std::move(announced));
    const auto& actual = j.at("actual");
    const auto& placements = j.at("placements");
    if (actual.size() != placements.size() || actual.size() > t.announcement.size()) {
      throw ParseError("transcript has inconsistent actual/placements lengths");
    }
    for (std::size_t i = 0; i < actual.size(); ++i) {
      Item item{i, t.announcement[i], Rational::parse(actual[i].get<std::string>())};
      if (!validate_actual(item.announced, t.announcement.delta(), item.actual)) {
        throw ParseError("transcript item " + std::to_string(i) + " lies outside its band");
      }
      const auto bin = placements[i].get<std::size_t>();
      t.final_state.place(bin, item);
      t.steps.push_back(Placement{std::move(item), bin});
    }
    for (const auto& [k, v] : j.at("counters").items()) t.counters[k] = v.get<std::int64_t>();
    std::vector<std::vector<std::size_t>> bins = j.at("bins").get<std::vector<std::vector<std::size_t>>>();
    if (bins.size() != t.final_state.bin_count()) throw ParseError("transcript bins disagree with placements");
    for (std::size_t b = 0; b < bins.size(); ++b) {
      if (bins[b] != t.final_state.bin(b).items) throw ParseError("transcript bins disagree with placements");
    }
    return t;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed transcript JSON: ") + e.what());
  }
}

}  // namespace binestim
