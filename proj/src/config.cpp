#include "orlicz/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "orlicz/specs.hpp"

namespace orlicz {

namespace pt = boost::property_tree;

namespace {

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

int positive_int(const std::string& key, const std::string& value) {
  std::int64_t v = 0;
  try {
    v = parse_int(value);
  } catch (const spec_error&) {
    throw config_error(key + ": not an integer: '" + value + "'");
  }
  if (v <= 0 || v > 1'000'000) throw config_error(key + " out of range: " + value);
  return static_cast<int>(v);
}

}  // namespace

SuiteConfig parse_config(const std::string& text) {
  pt::ptree tree;
  std::istringstream in(text);
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw config_error(std::string("config: ") + e.what());
  }
  SuiteConfig cfg;
  for (const auto& [section, body] : tree) {
    if (section == "suite") {
      for (const auto& [key, node] : body) {
        const std::string value = node.get_value<std::string>();
        if (key == "group") {
          cfg.group = value;
        } else if (key == "pair") {
          cfg.pair = value;
        } else if (key == "weight") {
          cfg.weight = value;
        } else if (key == "cocycle") {
          cfg.cocycle = value;
        } else if (key == "radius") {
          cfg.radius = positive_int(key, value);
        } else if (key == "samples") {
          cfg.samples = positive_int(key, value);
        } else if (key == "seed") {
          try {
            const auto v = parse_int(value);
            if (v < 0) throw spec_error(value);
            cfg.seed = static_cast<std::uint64_t>(v);
          } catch (const spec_error&) {
            throw config_error("seed: not a nonnegative integer: '" + value + "'");
          }
        } else {
          throw config_error("unknown key suite." + key);
        }
      }
    } else if (section == "tolerances") {
      for (const auto& [key, node] : body) {
        const std::string value = node.get_value<std::string>();
        try {
          cfg.tolerances[key] = parse_double(value);
        } catch (const spec_error&) {
          throw config_error("tolerances." + key + ": not a number: '" + value + "'");
        }
      }
    } else {
      throw config_error("unknown section [" + section + "]");
    }
  }
  return cfg;
}

SuiteConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error("cannot read config file " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

std::string format_config(const SuiteConfig& cfg) {
  std::ostringstream out;
  out << "[suite]\n"
      << "group = " << cfg.group << '\n'
      << "pair = " << cfg.pair << '\n'
      << "weight = " << cfg.weight << '\n'
      << "cocycle = " << cfg.cocycle << '\n'
      << "radius = " << cfg.radius << '\n'
      << "samples = " << cfg.samples << '\n'
      << "seed = " << cfg.seed << '\n';
  if (!cfg.tolerances.empty()) {
    out << "\n[tolerances]\n";
    for (const auto& [key, value] : cfg.tolerances) {
      out << key << " = " << format_double(value) << '\n';
    }
  }
  return out.str();
}

SuiteConfig resolve_config(const std::optional<std::string>& path) {
  if (path) return load_config(*path);
  if (const char* env = std::getenv(kConfigEnv); env != nullptr && *env != '\0') {
    return load_config(env);
  }
  return {};
}

}  // namespace orlicz
