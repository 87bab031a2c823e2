#include "toyscatter/instance.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include <nlohmann/json.hpp>

namespace toyscatter {

namespace {

SpeedList parse_side(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key)) throw InvalidInput(std::string("instance is missing field \"") + key + "\"");
  const auto& arr = doc.at(key);
  if (!arr.is_array()) throw InvalidInput(std::string("field \"") + key + "\" must be a list");

  SpeedList out;
  out.reserve(arr.size());
  for (const auto& v : arr) {
    if (v.is_string()) {
      out.push_back(Rational::parse(v.get<std::string>()));
    } else if (v.is_number_integer()) {
      // Covers both signed and unsigned JSON integers.
      out.push_back(Rational::parse(v.dump()));
    } else if (v.is_number_float()) {
      out.push_back(Rational::from_double_text(v.get<double>()));
    } else {
      throw InvalidInput(std::string("speeds in \"") + key + "\" must be numbers or strings");
    }
  }
  return out;
}

std::string join_sorted(SpeedList speeds) {
  std::sort(speeds.begin(), speeds.end());
  std::string out;
  for (std::size_t i = 0; i < speeds.size(); ++i) {
    if (i) out += ',';
    out += speeds[i].fraction();
  }
  return out;
}

GroupList group_side(const SpeedList& speeds) {
  std::map<Rational, std::size_t> counts;
  for (const auto& s : speeds) ++counts[s];
  GroupList out;
  out.reserve(counts.size());
  for (const auto& [speed, count] : counts) out.push_back({speed, count});
  return out;
}

void check_groups(const GroupList& groups, std::string_view side) {
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (groups[i].multiplicity == 0) {
      throw InvalidInput("zero multiplicity in side " + std::string(side));
    }
    if (groups[i].speed.sign() <= 0) {
      throw InvalidInput("non-positive speed " + groups[i].speed.str() + " in side " + std::string(side));
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (groups[i].speed == groups[j].speed) {
        throw InvalidInput("repeated group speed " + groups[i].speed.str() + " in side " + std::string(side));
      }
    }
  }
}

}  // namespace

Probability::Probability(Rational value) : value_(std::move(value)) {
  if (value_.sign() < 0 || value_ > Rational(1)) {
    throw std::domain_error("probability out of range: " + value_.str());
  }
}

void require_positive(std::span<const Rational> speeds, std::string_view side) {
  for (const auto& s : speeds) {
    if (s.sign() <= 0) {
      throw InvalidInput("speed " + s.str() + " in side " + std::string(side) + " is not positive");
    }
  }
}

Instance::Instance(SpeedList a, SpeedList b) : a_(std::move(a)), b_(std::move(b)) {
  require_positive(a_, "a");
  require_positive(b_, "b");
  if (a_.empty() && b_.empty()) throw InvalidInput("instance has no particles on either side");
}

Instance Instance::scaled(const Rational& factor) const {
  if (factor.sign() <= 0) throw InvalidInput("scale factor must be positive");
  SpeedList a = a_;
  SpeedList b = b_;
  for (auto& s : a) s *= factor;
  for (auto& s : b) s *= factor;
  return Instance(std::move(a), std::move(b));
}

GroupedInstance::GroupedInstance(GroupList a_groups, GroupList b_groups)
    : a_groups_(std::move(a_groups)), b_groups_(std::move(b_groups)) {
  check_groups(a_groups_, "a");
  check_groups(b_groups_, "b");
  if (a_groups_.empty() && b_groups_.empty()) {
    throw InvalidInput("instance has no particles on either side");
  }
}

std::size_t GroupedInstance::particle_count() const {
  std::size_t n = 0;
  for (const auto& g : a_groups_) n += g.multiplicity;
  for (const auto& g : b_groups_) n += g.multiplicity;
  return n;
}

Instance GroupedInstance::expand() const {
  auto unroll = [](const GroupList& groups) {
    SpeedList out;
    for (const auto& g : groups) out.insert(out.end(), g.multiplicity, g.speed);
    return out;
  };
  return Instance(unroll(a_groups_), unroll(b_groups_));
}

GroupedInstance group(const Instance& inst) {
  return GroupedInstance(group_side(inst.a()), group_side(inst.b()));
}

CanonicalKey canonical_key(const Instance& inst) {
  return CanonicalKey("a=" + join_sorted(inst.a()) + ";b=" + join_sorted(inst.b()));
}

Instance parse_instance(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("instance is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw InvalidInput("instance must be a JSON object");
  return Instance(parse_side(doc, "a"), parse_side(doc, "b"));
}

SpeedList parse_speed_list(std::string_view text) {
  SpeedList out;
  std::size_t start = 0;
  bool any_content = false;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) any_content = true;
  }
  if (!any_content) return out;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    out.push_back(Rational::parse(piece));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace toyscatter
