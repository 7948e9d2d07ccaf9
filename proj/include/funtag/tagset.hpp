#ifndef FUNTAG_TAGSET_HPP_
#define FUNTAG_TAGSET_HPP_

#include <cstdint>
#include <optional>
#include <string_view>

namespace funtag {

// Function tags in their fixed inventory order. The order matters: every
// tie-break in the tagger and the rule learner resolves by it, and model and
// rule files list tags in it. The published tagset table omits a bare Cau,
// yet the learned-transformation examples retag Cau to PCau, so Cau is kept
// in the inventory at its family position. Null is the sentinel carried by
// the sentence-final chunk and sorts last.
enum class FunctionTag : std::uint8_t {
  Active,
  Subj,
  PSubj,
  SubjP,
  Obj,
  PObj,
  ObjP,
  PIobj,
  IobjP,
  Pla,
  PPla,
  PlaP,
  Tim,
  PTim,
  TimP,
  PExt,
  ExtP,
  PSim,
  SimP,
  PCom,
  ComP,
  POwn,
  OwnP,
  Ada,
  PcomplS,
  PcomplO,
  PPcomplO,
  PcomplOP,
  PUse,
  UseP,
  Cau,
  PCau,
  CauP,
  PAim,
  AimP,
  CCS,
  CCM,
  CCC,
  CCP,
  CCA,
  Null,
};

inline constexpr std::size_t kFunctionTagCount = 41;

// Chunk types.
enum class ChunkType : std::uint8_t { NC, PPC, AC, RC, CC, VC, SFC };

inline constexpr std::size_t kChunkTypeCount = 7;

// Part-of-speech tags. "verb" is accepted as an input alias of v.
enum class Pos : std::uint8_t { n, pron, ppm, adj, adv, cc, part, v, sf };

inline constexpr std::size_t kPosCount = 9;

std::string_view to_string(FunctionTag tag);
std::string_view to_string(ChunkType type);
std::string_view to_string(Pos pos);

std::optional<FunctionTag> function_tag_from(std::string_view name);
std::optional<ChunkType> chunk_type_from(std::string_view name);
std::optional<Pos> pos_from(std::string_view name);

// True for "pos.category" strings on the known category list. The list is
// open-ended, so unknown categories are diagnostics, not errors.
bool known_category(std::string_view pos_dot_category);

}  // namespace funtag

#endif  // FUNTAG_TAGSET_HPP_
