#include "cache.hpp"

#include <openssl/evp.h>

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "projmon/error.hpp"
#include "projmon/serialize.hpp"

namespace projmon::app {

namespace fs = std::filesystem;

std::string sha256_hex(std::string_view data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1) throw Error("sha256 failed");
  static constexpr char hex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 15]);
  }
  return out;
}

fs::path default_cache_dir() {
  if (const char* env = std::getenv("PROJMON_CACHE"); env && *env) return env;
  return ".projmon-cache";
}

namespace {

enum class Load { Hit, Invalid, OverCap };

Load try_load(Monoid& m, const fs::path& file, const std::string& desc, std::size_t cap) {
  std::ifstream in(file);
  try {
    json j = json::parse(in);
    if (j.at("descriptor").get<std::string>() != desc) return Load::Invalid;
    const json& elems = j.at("elements");
    if (sha256_hex(elems.dump()) != j.at("digest").get<std::string>()) return Load::Invalid;
    if (elems.size() > cap) return Load::OverCap;
    return m.adopt_elements(elements_from_json(elems, m)) ? Load::Hit : Load::Invalid;
  } catch (const std::exception&) {
    return Load::Invalid;
  }
}

void store(const Monoid& m, const fs::path& dir, const fs::path& file, const std::string& desc) {
  json elems = elements_to_json(m);
  json entry = {{"descriptor", desc}, {"digest", sha256_hex(elems.dump())}, {"elements", elems}};
  fs::create_directories(dir);
  std::random_device rd;
  fs::path tmp = file;
  tmp += ".tmp" + std::to_string(rd());
  {
    std::ofstream out(tmp);
    out << entry.dump();
    if (!out) throw Error("cannot write cache file " + tmp.string());
  }
  fs::rename(tmp, file);
}

}  // namespace

CacheOutcome close_cached(Monoid& m, std::size_t cap, const fs::path& dir) {
  CacheOutcome out;
  std::string desc = canonical_text(descriptor_of(m));
  out.file = dir / (sha256_hex(desc) + ".json");
  if (m.status() == ClosureStatus::Unclosed && fs::exists(out.file)) {
    Load r = try_load(m, out.file, desc, cap);
    if (r == Load::Hit) {
      out.hit = true;
      return out;
    }
    if (r == Load::OverCap) {
      m.close(cap);
      return out;
    }
    out.discarded = true;
    std::error_code ec;
    fs::remove(out.file, ec);
  }
  m.close(cap);
  if (m.finite()) store(m, dir, out.file, desc);
  return out;
}

}  // namespace projmon::app
