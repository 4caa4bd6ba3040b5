#include <bit>
#include <cstring>
#include <istream>
#include <ostream>
#include <string>

#include "fvqsd/error.hpp"
#include "fvqsd/graphical.hpp"

namespace fvqsd {
namespace {

constexpr char kMagic[8] = {'F', 'V', 'Q', 'S', 'D', 'M', 'R', 'K'};
constexpr std::uint32_t kVersion = 1;

template <class UInt>
void put(std::ostream& out, UInt value) {
  char bytes[sizeof(UInt)];
  for (std::size_t b = 0; b < sizeof(UInt); ++b) bytes[b] = static_cast<char>((value >> (8 * b)) & 0xFF);
  out.write(bytes, sizeof(UInt));
}

void put_double(std::ostream& out, double value) { put(out, std::bit_cast<std::uint64_t>(value)); }

template <class UInt>
UInt get(std::istream& in) {
  unsigned char bytes[sizeof(UInt)];
  if (!in.read(reinterpret_cast<char*>(bytes), sizeof(UInt))) {
    throw Error(ErrorCode::IoError, "truncated mark dump");
  }
  UInt value = 0;
  for (std::size_t b = 0; b < sizeof(UInt); ++b) value |= static_cast<UInt>(bytes[b]) << (8 * b);
  return value;
}

double get_double(std::istream& in) { return std::bit_cast<double>(get<std::uint64_t>(in)); }

}  // namespace

void write_marks(std::ostream& out, const MarkRealization& marks) {
  out.write(kMagic, sizeof(kMagic));
  put<std::uint32_t>(out, kVersion);
  put<std::uint32_t>(out, static_cast<std::uint32_t>(marks.particles()));
  put<std::uint32_t>(out, static_cast<std::uint32_t>(marks.sites()));
  put_double(out, marks.horizon());
  for (std::size_t i = 0; i < marks.particles(); ++i) {
    put<std::uint64_t>(out, marks.internal(i).size());
    for (const InternalMark& m : marks.internal(i)) {
      put_double(out, m.time);
      for (Site s : m.map) put<std::uint32_t>(out, s);
    }
    put<std::uint64_t>(out, marks.voter(i).size());
    for (const VoterMark& m : marks.voter(i)) {
      put_double(out, m.time);
      put<std::uint32_t>(out, m.source);
      for (std::uint8_t z : m.fires) put<std::uint8_t>(out, z);
    }
  }
  if (!out) throw Error(ErrorCode::IoError, "failed writing mark dump");
}

MarkRealization read_marks(std::istream& in) {
  char magic[sizeof(kMagic)];
  if (!in.read(magic, sizeof(magic)) || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0) {
    throw Error(ErrorCode::IoError, "not a mark dump (bad magic)");
  }
  const auto version = get<std::uint32_t>(in);
  if (version != kVersion) {
    throw Error(ErrorCode::IoError, "unsupported mark dump version " + std::to_string(version));
  }
  const auto particles = get<std::uint32_t>(in);
  const auto sites = get<std::uint32_t>(in);
  const double horizon = get_double(in);

  std::vector<std::vector<InternalMark>> internal(particles);
  std::vector<std::vector<VoterMark>> voter(particles);
  for (std::uint32_t i = 0; i < particles; ++i) {
    const auto n_internal = get<std::uint64_t>(in);
    for (std::uint64_t k = 0; k < n_internal; ++k) {
      InternalMark m{get_double(in), std::vector<Site>(sites)};
      for (auto& s : m.map) s = get<std::uint32_t>(in);
      internal[i].push_back(std::move(m));
    }
    const auto n_voter = get<std::uint64_t>(in);
    for (std::uint64_t k = 0; k < n_voter; ++k) {
      VoterMark m;
      m.time = get_double(in);
      m.source = get<std::uint32_t>(in);
      m.fires.resize(sites);
      for (auto& z : m.fires) z = get<std::uint8_t>(in);
      voter[i].push_back(std::move(m));
    }
  }
  return MarkRealization(particles, sites, horizon, std::move(internal), std::move(voter));
}

}  // namespace fvqsd
