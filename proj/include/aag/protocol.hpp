#pragma once

#include <cstdint>

#include "aag/platform.hpp"

namespace aag {

struct ProtocolParams {
  int alice_tuple_size = 20;    // N1
  int bob_tuple_size = 20;      // N2
  int private_word_length = 5;  // L
  int gen_word_length = 10;     // letters per public-tuple element
  std::uint64_t seed = 0;
};

/// Everything an eavesdropper sees: the two public tuples and the two
/// published conjugate tuples. alice_conjugates[i] = b_i^A (indexed like
/// bob_public), bob_conjugates[i] = a_i^B (indexed like alice_public).
struct PublicView {
  std::vector<GroupElement> alice_public;
  std::vector<GroupElement> bob_public;
  std::vector<GroupElement> alice_conjugates;
  std::vector<GroupElement> bob_conjugates;
};

/// Full record of one exchange. The secrets and the shared key are kept for
/// evaluation; public_view() is the attacker-facing projection.
struct Transcript {
  std::vector<GroupElement> alice_public;
  std::vector<GroupElement> bob_public;
  GroupWord alice_private_word;  // over alice_public indices
  GroupWord bob_private_word;    // over bob_public indices
  std::vector<GroupElement> alice_conjugates;  // b_i^A
  std::vector<GroupElement> bob_conjugates;    // a_i^B
  GroupElement shared_key;                     // [A, B]
  GroupElement alice_secret;                   // A
  GroupElement bob_secret;                     // B

  bool operator==(const Transcript&) const = default;
};

PublicView public_view(const Transcript& t);

/// Runs one full exchange. Draw order under the seed: the N1 Alice tuple
/// words, the N2 Bob tuple words, Alice's private word, Bob's private word.
/// Both key-computation routes are evaluated and checked against [A, B]
/// before the transcript is returned.
Transcript run_protocol(const PlatformSpec& spec, const ProtocolParams& params);

/// Alice's route: A^-1 times her private word evaluated over the published
/// a_i^B tuple. Rejects an empty word; letter indices must address
/// alice_public.
GroupElement alice_key(const PublicView& view, const GroupWord& alice_word,
                       const GroupElement& alice_secret);

/// Bob's route: the inverse of his private word evaluated over the published
/// b_i^A tuple, times B.
GroupElement bob_key(const PublicView& view, const GroupWord& bob_word,
                     const GroupElement& bob_secret);

std::string transcript_to_json(const Transcript& t, const PlatformSpec& spec);
Transcript transcript_from_json(const std::string& text, const PlatformSpec& spec);
std::string public_view_to_json(const PublicView& view, const PlatformSpec& spec);
PublicView public_view_from_json(const std::string& text, const PlatformSpec& spec);

}  // namespace aag
