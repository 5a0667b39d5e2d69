#include "cthash/hash.hpp"

#include <algorithm>
#include <cstdlib>
#include <exception>
#include <limits>
#include <thread>

#include "cthash/encoding.hpp"
#include "cthash/error.hpp"

namespace cthash {

namespace {

constexpr std::size_t kMaxMessageBytes = std::numeric_limits<std::uint64_t>::max() / 8;

void check_side(std::size_t n) {
  if (n < 2) throw Error(ErrorKind::Range, "block side must be at least 2, got " + std::to_string(n));
  if (n > 1024) throw Error(ErrorKind::Range, "block side " + std::to_string(n) + " too large");
}

}  // namespace

Message::Message(std::vector<std::uint8_t> bytes) {
  if (bytes.size() > kMaxMessageBytes) {
    throw Error(ErrorKind::Range, "message too long: length must stay below 2^64 bits");
  }
  bits_ = BitString::from_bytes(bytes);
}

Message::Message(std::string_view text)
    : Message(std::vector<std::uint8_t>(text.begin(), text.end())) {}

Message::Message(const BitString& bits) : bits_(bits) {}

std::uint64_t padded_length(std::uint64_t bit_length, std::size_t n) {
  check_side(n);
  const std::uint64_t block = static_cast<std::uint64_t>(n) * n * n;
  const std::uint64_t need = bit_length + 1 + kLengthFieldBits;
  if (need < bit_length) throw Error(ErrorKind::Range, "message too long: length must stay below 2^64 bits");
  const std::uint64_t blocks = need / block + (need % block != 0);
  return blocks * block;
}

BitString pad(const Message& m, std::size_t n) {
  const std::uint64_t len = m.bit_length();
  const std::uint64_t total = padded_length(len, n);
  BitString out = m.bits();
  out.reserve(total);
  out.push_back(true);
  const std::uint64_t zeros = total - len - 1 - kLengthFieldBits;
  if (out.size() % 8 == 0) {
    out.append(BitString(zeros, false));
  } else {
    for (std::uint64_t z = 0; z < zeros; ++z) out.push_back(false);
  }
  out.append_bits(len, kLengthFieldBits);
  return out;
}

Tensor3 vect_mat(const BitString& bits, std::size_t offset, std::size_t n) {
  const std::size_t volume = n * n * n;
  if (offset > bits.size() || bits.size() - offset < volume) {
    throw Error(ErrorKind::Shape, "block needs " + std::to_string(volume) + " bits");
  }
  Tensor3 a(n);
  auto cells = a.entries();
  for (std::size_t t = 0; t < volume; ++t) cells[t] = bits[offset + t];
  return a;
}

Tensor3 vect_mat(const BitString& block, std::size_t n) {
  if (block.size() != n * n * n) {
    throw Error(ErrorKind::Shape, "VectMat expects exactly " + std::to_string(n * n * n) +
                                      " bits, got " + std::to_string(block.size()));
  }
  return vect_mat(block, 0, n);
}

BitString h1_block(const Tensor3& a, const ParameterPair& params) {
  BitString out = g2(elem_product3(a, params.v()));
  out.append(g2(elem_product3(a, params.w())));
  return out;
}

BitString h1(const Message& m, const ParameterPair& params, H1Options options) {
  const std::size_t n = params.side();
  const BitString padded = pad(m, n);
  const std::size_t volume = n * n * n;
  const std::size_t blocks = padded.size() / volume;

  auto run = [&](std::size_t first, std::size_t last) {
    BitString part;
    for (std::size_t b = first; b < last; ++b) {
      part.append(h1_block(vect_mat(padded, b * volume, n), params));
    }
    return part;
  };

  const std::size_t threads = std::min<std::size_t>(std::max(1u, options.threads), blocks);
  if (threads <= 1) return run(0, blocks);

  std::vector<BitString> parts(threads);
  std::vector<std::exception_ptr> errors(threads);
  {
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) {
      const std::size_t first = blocks * t / threads;
      const std::size_t last = blocks * (t + 1) / threads;
      workers.emplace_back([&, t, first, last] {
        try {
          parts[t] = run(first, last);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  BitString out;
  for (const auto& part : parts) out.append(part);
  return out;
}

Digest h3(const Message& m, const ParameterPair& params, InnerDigest inner, H1Options options) {
  const BitString intermediate = h1(m, params, options);
  return h2(intermediate.packed(), inner);
}

unsigned threads_from_env() {
  const char* raw = std::getenv("CT_HASH_THREADS");
  if (raw == nullptr) return 1;
  char* end = nullptr;
  const unsigned long v = std::strtoul(raw, &end, 10);
  if (end == raw || *end != '\0' || v == 0) return 1;
  return static_cast<unsigned>(std::min<unsigned long>(v, 256));
}

}  // namespace cthash
