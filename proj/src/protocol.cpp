#include "aag/protocol.hpp"

#include <stdexcept>

#include "aag/serial.hpp"

namespace aag {

PublicView public_view(const Transcript& t) {
  return PublicView{t.alice_public, t.bob_public, t.alice_conjugates, t.bob_conjugates};
}

GroupElement alice_key(const PublicView& view, const GroupWord& alice_word,
                       const GroupElement& alice_secret) {
  if (alice_word.letters.empty())
    throw std::invalid_argument("alice_key: private word must be nonempty");
  return g_mul(g_inv(alice_secret), eval_word(alice_word, view.bob_conjugates));
}

GroupElement bob_key(const PublicView& view, const GroupWord& bob_word,
                     const GroupElement& bob_secret) {
  if (bob_word.letters.empty())
    throw std::invalid_argument("bob_key: private word must be nonempty");
  return g_mul(g_inv(eval_word(bob_word, view.alice_conjugates)), bob_secret);
}

Transcript run_protocol(const PlatformSpec& spec, const ProtocolParams& params) {
  if (params.alice_tuple_size < 1 || params.bob_tuple_size < 1 ||
      params.private_word_length < 1 || params.gen_word_length < 1)
    throw std::invalid_argument("run_protocol: all sizes and lengths must be >= 1");

  Rng rng(params.seed);
  const std::vector<GroupElement> gens = spec.generators();
  const auto word_len = static_cast<std::size_t>(params.gen_word_length);

  std::vector<GroupElement> alice_public, bob_public;
  alice_public.reserve(static_cast<std::size_t>(params.alice_tuple_size));
  bob_public.reserve(static_cast<std::size_t>(params.bob_tuple_size));
  for (int i = 0; i < params.alice_tuple_size; ++i)
    alice_public.push_back(eval_word(random_word(rng, gens.size(), word_len), gens));
  for (int i = 0; i < params.bob_tuple_size; ++i)
    bob_public.push_back(eval_word(random_word(rng, gens.size(), word_len), gens));

  const auto priv_len = static_cast<std::size_t>(params.private_word_length);
  const GroupWord alice_word = random_word(rng, alice_public.size(), priv_len);
  const GroupWord bob_word = random_word(rng, bob_public.size(), priv_len);
  const GroupElement a = eval_word(alice_word, alice_public);
  const GroupElement b = eval_word(bob_word, bob_public);

  std::vector<GroupElement> alice_conjugates, bob_conjugates;
  alice_conjugates.reserve(bob_public.size());
  bob_conjugates.reserve(alice_public.size());
  for (const GroupElement& g : bob_public) alice_conjugates.push_back(g_conj(g, a));
  for (const GroupElement& g : alice_public) bob_conjugates.push_back(g_conj(g, b));

  Transcript t{std::move(alice_public), std::move(bob_public),
               alice_word,              bob_word,
               std::move(alice_conjugates), std::move(bob_conjugates),
               commutator(a, b),        a,
               b};

  const PublicView view = public_view(t);
  if (!(alice_key(view, t.alice_private_word, t.alice_secret) == t.shared_key) ||
      !(bob_key(view, t.bob_private_word, t.bob_secret) == t.shared_key))
    throw std::logic_error("run_protocol: key agreement identity failed");
  return t;
}

namespace {

using nlohmann::json;

json element_to_json(const GroupElement& g) {
  return json{{"unit", vector_to_json(g.unit.coeffs())},
              {"translation", vector_to_json(g.translation.coeffs())}};
}

GroupElement element_from_json(const json& j, const FieldHandle& field) {
  if (!j.is_object() || !j.contains("unit") || !j.contains("translation"))
    throw FixtureError("parse error: group element must carry unit and translation");
  const Index n = field->degree();
  return GroupElement{field->element(vector_from_json(j["unit"], n, "unit part")),
                      field->element(vector_from_json(j["translation"], n, "translation part")),
                      false};
}

json tuple_to_json(const std::vector<GroupElement>& tuple) {
  json arr = json::array();
  for (const GroupElement& g : tuple) arr.push_back(element_to_json(g));
  return arr;
}

std::vector<GroupElement> tuple_from_json(const json& j, const FieldHandle& field,
                                          const char* what) {
  if (!j.is_array() || j.empty())
    throw FixtureError(std::string("parse error: ") + what + " must be a nonempty array");
  std::vector<GroupElement> tuple;
  tuple.reserve(j.size());
  for (const json& e : j) tuple.push_back(element_from_json(e, field));
  return tuple;
}

json word_to_json(const GroupWord& word) {
  json arr = json::array();
  for (const auto& letter : word.letters)
    arr.push_back(json::array({letter.index, letter.exponent}));
  return arr;
}

GroupWord word_from_json(const json& j, const char* what) {
  if (!j.is_array())
    throw FixtureError(std::string("parse error: ") + what + " must be an array of letters");
  GroupWord word;
  word.letters.reserve(j.size());
  for (const json& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw FixtureError(std::string("parse error: ") + what +
                         " letters must be [index, exponent] integer pairs");
    const int exponent = e[1].get<int>();
    if (exponent != 1 && exponent != -1)
      throw FixtureError(std::string("parse error: ") + what + " exponents must be +-1");
    word.letters.push_back({e[0].get<int>(), exponent});
  }
  return word;
}

void check_platform_stamp(const json& doc, const PlatformSpec& spec) {
  if (!doc.contains("platform") || !doc["platform"].is_string())
    throw FixtureError("parse error: document missing platform name");
  if (doc["platform"].get<std::string>() != spec.name)
    throw FixtureError("platform mismatch: document is for " +
                       doc["platform"].get<std::string>() + ", loaded platform is " + spec.name);
}

json parse_document(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object())
    throw FixtureError("parse error: document is not a JSON object");
  return doc;
}

}  // namespace

std::string transcript_to_json(const Transcript& t, const PlatformSpec& spec) {
  json doc{{"platform", spec.name},
           {"alice_public", tuple_to_json(t.alice_public)},
           {"bob_public", tuple_to_json(t.bob_public)},
           {"alice_private_word", word_to_json(t.alice_private_word)},
           {"bob_private_word", word_to_json(t.bob_private_word)},
           {"alice_conjugates", tuple_to_json(t.alice_conjugates)},
           {"bob_conjugates", tuple_to_json(t.bob_conjugates)},
           {"shared_key", element_to_json(t.shared_key)},
           {"alice_secret", element_to_json(t.alice_secret)},
           {"bob_secret", element_to_json(t.bob_secret)}};
  return doc.dump(2) + "\n";
}

Transcript transcript_from_json(const std::string& text, const PlatformSpec& spec) {
  const json doc = parse_document(text);
  check_platform_stamp(doc, spec);
  for (const char* key : {"alice_public", "bob_public", "alice_private_word",
                          "bob_private_word", "alice_conjugates", "bob_conjugates",
                          "shared_key", "alice_secret", "bob_secret"})
    if (!doc.contains(key))
      throw FixtureError(std::string("parse error: transcript missing field ") + key);

  const FieldHandle& field = spec.field;
  Transcript t{tuple_from_json(doc["alice_public"], field, "alice_public"),
               tuple_from_json(doc["bob_public"], field, "bob_public"),
               word_from_json(doc["alice_private_word"], "alice_private_word"),
               word_from_json(doc["bob_private_word"], "bob_private_word"),
               tuple_from_json(doc["alice_conjugates"], field, "alice_conjugates"),
               tuple_from_json(doc["bob_conjugates"], field, "bob_conjugates"),
               element_from_json(doc["shared_key"], field),
               element_from_json(doc["alice_secret"], field),
               element_from_json(doc["bob_secret"], field)};
  if (t.alice_conjugates.size() != t.bob_public.size() ||
      t.bob_conjugates.size() != t.alice_public.size())
    throw FixtureError("parse error: conjugate tuple lengths disagree with public tuples");
  return t;
}

std::string public_view_to_json(const PublicView& view, const PlatformSpec& spec) {
  json doc{{"platform", spec.name},
           {"alice_public", tuple_to_json(view.alice_public)},
           {"bob_public", tuple_to_json(view.bob_public)},
           {"alice_conjugates", tuple_to_json(view.alice_conjugates)},
           {"bob_conjugates", tuple_to_json(view.bob_conjugates)}};
  return doc.dump(2) + "\n";
}

PublicView public_view_from_json(const std::string& text, const PlatformSpec& spec) {
  const json doc = parse_document(text);
  check_platform_stamp(doc, spec);
  for (const char* key : {"alice_public", "bob_public", "alice_conjugates", "bob_conjugates"})
    if (!doc.contains(key))
      throw FixtureError(std::string("parse error: public view missing field ") + key);
  const FieldHandle& field = spec.field;
  PublicView view{tuple_from_json(doc["alice_public"], field, "alice_public"),
                  tuple_from_json(doc["bob_public"], field, "bob_public"),
                  tuple_from_json(doc["alice_conjugates"], field, "alice_conjugates"),
                  tuple_from_json(doc["bob_conjugates"], field, "bob_conjugates")};
  if (view.alice_conjugates.size() != view.bob_public.size() ||
      view.bob_conjugates.size() != view.alice_public.size())
    throw FixtureError("parse error: conjugate tuple lengths disagree with public tuples");
  return view;
}

}  // namespace aag
