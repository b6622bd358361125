#include "somos/verdict.hpp"

#include <cstdio>

namespace somos {

std::string_view to_string(Status s) noexcept {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skip: return "skip";
  }
  return "?";
}

void VerdictReport::pass(std::string key, std::optional<std::string> note) {
  if (note) note = truncate_witness(std::move(*note));
  items.push_back({std::move(key), Status::Pass, std::move(note), 0});
}

void VerdictReport::fail(std::string key, std::string witness) {
  items.push_back({std::move(key), Status::Fail, truncate_witness(std::move(witness)), 0});
}

void VerdictReport::skip(std::string key, std::string reason) {
  items.push_back({std::move(key), Status::Skip, std::move(reason), 0});
}

void VerdictReport::absorb(const VerdictReport& other, std::string_view prefix) {
  for (const auto& it : other.items) {
    VerdictItem copy = it;
    copy.key = std::string(prefix) + "/" + it.key;
    items.push_back(std::move(copy));
  }
}

bool VerdictReport::passed() const noexcept { return first_failure() == nullptr; }

const VerdictItem* VerdictReport::first_failure() const noexcept {
  for (const auto& it : items)
    if (it.status == Status::Fail) return &it;
  return nullptr;
}

std::string truncate_witness(std::string w) {
  if (w.size() <= kMaxWitnessLength) return w;
  std::size_t dropped = w.size() - kMaxWitnessLength;
  w.resize(kMaxWitnessLength);
  w += "... (" + std::to_string(dropped) + " more chars)";
  return w;
}

std::string index_key(std::string_view label, long n) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%s%02ld", n < 0 ? "-" : "", n < 0 ? -n : n);
  return std::string(label) + "=" + buf;
}

}  // namespace somos
