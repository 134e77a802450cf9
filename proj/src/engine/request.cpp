#include "wolfarena/engine/request.hpp"

namespace wolfarena {

const char* request_kind_name(RequestKind k) {
  switch (k) {
    case RequestKind::WolfProposal: return "wolf_proposal";
    case RequestKind::GuardTarget: return "guard_target";
    case RequestKind::SeerTarget: return "seer_target";
    case RequestKind::WitchDecision: return "witch_decision";
    case RequestKind::HunterShot: return "hunter_shot";
    case RequestKind::ElectionBallot: return "election_ballot";
    case RequestKind::Speech: return "speech";
    case RequestKind::PseudoBallot: return "pseudo_ballot";
    case RequestKind::SheriffSummaryRequest: return "sheriff_summary";
    case RequestKind::InferenceRequest: return "inference";
    case RequestKind::OfficialBallot: return "official_ballot";
    case RequestKind::TiebreakBallot: return "tiebreak_ballot";
    case RequestKind::SpeakingOrderChoice: return "speaking_order";
  }
  return "?";
}

bool is_ballot(RequestKind k) {
  return k == RequestKind::ElectionBallot || k == RequestKind::PseudoBallot ||
         k == RequestKind::OfficialBallot || k == RequestKind::TiebreakBallot;
}

VoteKind ballot_vote_kind(RequestKind k) {
  switch (k) {
    case RequestKind::ElectionBallot: return VoteKind::Election;
    case RequestKind::PseudoBallot: return VoteKind::Pseudo;
    case RequestKind::OfficialBallot: return VoteKind::Official;
    case RequestKind::TiebreakBallot: return VoteKind::Tiebreak;
    default: throw EngineError("not a ballot request");
  }
}

}  // namespace wolfarena
