#include "askey/banita_relations.hpp"

#include "askey/banita.hpp"

namespace askey {

VerificationReport verify_bi_relation(const BIEntry& entry, Direction dir,
                                      const ParameterSet& params) {
    RelationInstance rel = Catalog::instance().instantiate(entry, dir, params);
    return verify_relation(rel);
}

RelationInstance compose_bi_pair(const BIEntry& first, const BIEntry& second, Direction second_dir,
                                 const ParameterSet& params) {
    const Catalog& cat = Catalog::instance();
    RelationInstance head = cat.instantiate(first, Direction::Plus, params);

    if (second_dir == Direction::Plus) {
        RelationInstance tail = cat.instantiate(second, Direction::Plus, head.target);
        RelationInstance out = compose_a2_to_b2p(head, tail);
        out.kind = RelationKind::BIrel;
        return out;
    }
    RelationInstance tail = cat.instantiate(second, Direction::Minus, params);
    if (!(tail.target == head.target))
        throw IncompatibleShifts("BI pair does not meet at a common barred set");
    RelationInstance out = compose_a2_to_b2(head, tail);
    out.kind = RelationKind::BIrel;
    return out;
}

BiNonexistenceReport bi_a2_nonexistence(int n_parity, const std::vector<int>& n_values,
                                        int samples, std::uint64_t seed) {
    SearchSpace space;
    space.family = FamilyId::BI;
    space.n_parity = n_parity;
    space.n_values = n_values;
    space.samples = samples;
    space.seed = seed;
    space.param_moves.clear();
    for (int twice = -4; twice <= 4; ++twice) space.param_moves.push_back(Rational(twice, 2));

    ClassifyResult r = classify(space, ConstraintKind::A2);
    BiNonexistenceReport rep;
    rep.candidates = r.candidates;
    rep.identity_passed = r.identity_passed;
    for (const auto& s : r.discovered) rep.survivors.push_back(s.key());
    return rep;
}

} // namespace askey
