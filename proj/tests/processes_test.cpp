#include <gtest/gtest.h>

#include "stoptime/generators.hpp"
#include "stoptime/processes.hpp"
#include "support.hpp"

namespace stoptime {
namespace {

using testing::reference_filtration;

constexpr auto kInf = TimePoint::infinity();
const TimePoint t0(0), t1(1), t2(2);

// Common refinement of two partitions.
Partition meet(const Partition& p, const Partition& q) {
    std::vector<std::size_t> key(p.atom_count());
    for (AtomIndex atom = 0; atom < key.size(); ++atom) {
        key[atom] = p.block_of(atom) * q.atom_count() + q.block_of(atom);
    }
    return Partition::from_labels(key);
}

Filtration refine_every_level(const Filtration& f, const Partition& extra) {
    std::vector<Partition> levels;
    for (const auto& level : f.levels()) levels.push_back(meet(level, extra));
    return Filtration(f.space(), f.grid(), std::move(levels), meet(f.terminal(), extra));
}

TEST(IsStoppingTime, DeterministicAndInfiniteTimes) {
    const auto f = reference_filtration();
    for (auto c : {t0, t1, t2, kInf}) {
        EXPECT_TRUE(is_stopping_time(RandomTime::constant(4, c), f));
    }
}

TEST(IsStoppingTime, FuturePeekingTimeFailsAtFirstTime) {
    const auto f = reference_filtration();
    const RandomTime tau({t0, kInf, kInf, kInf});
    const auto verdict = is_stopping_time(tau, f);
    EXPECT_FALSE(verdict);
    EXPECT_EQ(verdict.times, std::vector<TimePoint>{t0});
    EXPECT_NE(verdict.diagnostic.find("{tau <= 0} = {a}"), std::string::npos) << verdict.diagnostic;
    EXPECT_NE(verdict.diagnostic.find("t=0"), std::string::npos);
}

TEST(IsStoppingTime, StopsOnFirstLevelBlock) {
    EXPECT_TRUE(is_stopping_time(RandomTime({t1, t1, kInf, kInf}), reference_filtration()));
}

TEST(IsStoppingTime, ReportsFirstFailingTimeInGridOrder) {
    // {tau <= 1} = {a} splits {a,b}; {tau <= 2} is fine.
    const auto verdict = is_stopping_time(RandomTime({t1, t2, kInf, kInf}), reference_filtration());
    EXPECT_FALSE(verdict);
    EXPECT_EQ(verdict.times, std::vector<TimePoint>{t1});
}

TEST(IsStoppingTime, ShapeErrors) {
    const auto f = reference_filtration();
    EXPECT_THROW(is_stopping_time(RandomTime({t0, t0, t0}), f), DomainError);
    EXPECT_THROW(is_stopping_time(RandomTime({t0, t0, t0, TimePoint(3)}), f), DomainError);
}

TEST(IsStoppingProcess, ConstantProcesses) {
    const auto f = reference_filtration();
    EXPECT_TRUE(is_stopping_process(BinaryProcess::constant(3, 4, 1), f));
    EXPECT_TRUE(is_stopping_process(BinaryProcess::constant(3, 4, 0), f));
}

TEST(IsStoppingProcess, IncreasingPathFailsMonotonicity) {
    // Every atom goes 0 -> 1 between t=0 and t=1: adapted, not non-increasing.
    const BinaryProcess x(3, 4, {0, 0, 0, 0, 1, 1, 1, 1, 1, 1, 1, 1});
    const auto verdict = is_stopping_process(x, reference_filtration());
    EXPECT_FALSE(verdict);
    EXPECT_EQ(verdict.times, std::vector<TimePoint>{t1});
    EXPECT_NE(verdict.diagnostic.find("not non-increasing"), std::string::npos);
}

TEST(IsStoppingProcess, NonBlockConstantSectionFailsAdaptedness) {
    // X_1(a) = 1, X_1(b) = 0 splits the F_1 block {a,b}.
    const BinaryProcess x(3, 4, {1, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0});
    const auto verdict = is_stopping_process(x, reference_filtration());
    EXPECT_FALSE(verdict);
    EXPECT_EQ(verdict.times, std::vector<TimePoint>{t1});
    EXPECT_NE(verdict.diagnostic.find("not adapted"), std::string::npos);
}

TEST(IsStoppingProcess, RejectsBadValuesAndShapes) {
    EXPECT_THROW(BinaryProcess(1, 2, {0, 2}), DomainError);
    EXPECT_THROW(BinaryProcess(1, 2, {0}), DomainError);
    EXPECT_THROW(is_stopping_process(BinaryProcess::constant(2, 4, 1), reference_filtration()),
                 DomainError);
}

TEST(TimesEqualAs, NullDifferences) {
    const SampleSpace space({"a", "b", "c"}, {Rational(0), Rational(1, 2), Rational(1, 2)});
    const RandomTime tau({t0, t1, kInf});
    EXPECT_TRUE(times_equal_as(tau, tau, space));
    EXPECT_TRUE(times_equal_as(tau, RandomTime({kInf, t1, kInf}), space));
    EXPECT_FALSE(times_equal_as(tau, RandomTime({t0, t2, kInf}), space));
    EXPECT_THROW(times_equal_as(tau, RandomTime({t0}), space), DomainError);
}

TEST(ProcessesEqualAs, NullDifferences) {
    const SampleSpace space({"a", "b"}, {Rational(0), Rational(1)});
    const BinaryProcess x(2, 2, {1, 1, 0, 1});
    EXPECT_TRUE(processes_equal_as(x, BinaryProcess(2, 2, {1, 1, 1, 1}), space));
    EXPECT_FALSE(processes_equal_as(x, BinaryProcess(2, 2, {1, 1, 0, 0}), space));
}

TEST(Member, PointsAndInterval) {
    const Interval half_open{Rational(1), true, Rational(2), false};
    const BorelSet interval({half_open}, {});
    EXPECT_TRUE(member(Rational(0), BorelSet::point(Rational(0))));
    EXPECT_FALSE(member(Rational(1), interval));
    EXPECT_TRUE(member(Rational(2), interval));
    EXPECT_TRUE(member(Rational(3, 2), interval));
    EXPECT_FALSE(member(Rational(5, 2), interval));
}

TEST(Member, UnboundedEnds) {
    const BorelSet below({Interval{std::nullopt, false, Rational(0), true}}, {});
    EXPECT_TRUE(below.intervals()[0].lo_open);
    EXPECT_TRUE(member(Rational(-1000000), below));
    EXPECT_FALSE(member(Rational(0), below));
    const BorelSet everything({Interval{}}, {});
    EXPECT_TRUE(member(Rational(42), everything));
    EXPECT_FALSE(member(Rational(0), BorelSet()));
}

TEST(BorelSet, RejectsInvalidIntervals) {
    EXPECT_THROW(BorelSet({Interval{Rational(2), false, Rational(1), false}}, {}), DomainError);
    EXPECT_THROW(BorelSet({Interval{Rational(1), true, Rational(1), false}}, {}), DomainError);
    EXPECT_NO_THROW(BorelSet({Interval{Rational(1), false, Rational(1), false}}, {}));
}

TEST(TimesProperties, MoreInformationPreservesStopping) {
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const auto f = gen_filtration(seed, 6, 5);
        const auto tau = gen_stopping_time(seed, f);
        ASSERT_TRUE(is_stopping_time(tau, f));
        Rng rng(seed, 7);
        std::vector<std::size_t> key(f.atom_count());
        for (auto& k : key) k = rng.below(3);
        const auto finer = refine_every_level(f, Partition::from_labels(key));
        ASSERT_TRUE(validate_filtration(finer));
        EXPECT_TRUE(is_stopping_time(tau, finer)) << "seed " << seed;
    }
}

TEST(TimesProperties, DeterministicTimesStopEverywhere) {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const auto f = gen_filtration(seed, 6, 5);
        for (std::size_t i = 0; i < f.time_count(); ++i) {
            EXPECT_TRUE(is_stopping_time(RandomTime::constant(f.atom_count(), TimePoint(i)), f));
        }
        EXPECT_TRUE(is_stopping_time(RandomTime::constant(f.atom_count(), kInf), f));
    }
}

TEST(TimesProperties, StoppingProcessSectionsAreMeasurableIndicators) {
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const auto f = gen_filtration(seed, 6, 5);
        const auto x = gen_stopping_process(seed, f);
        ASSERT_TRUE(is_stopping_process(x, f));
        for (std::size_t i = 0; i < f.time_count(); ++i) {
            EventSet alive(f.atom_count());
            for (AtomIndex atom = 0; atom < f.atom_count(); ++atom) {
                if (x(TimePoint(i), atom) == 1) alive.insert(atom);
            }
            EXPECT_TRUE(is_measurable(alive, f.levels()[i]));
        }
    }
}

TEST(TimesProperties, VerdictsInvariantUnderRelabeling) {
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const auto f = gen_filtration(seed, 6, 4);
        const auto perm = testing::permutation(seed, f.atom_count());
        const auto g = testing::relabel(f, perm);
        // Arbitrary (mostly non-stopping) candidates exercise both verdicts.
        Rng rng(seed, 11);
        std::vector<TimePoint> values;
        std::vector<std::uint8_t> cells;
        for (AtomIndex atom = 0; atom < f.atom_count(); ++atom) {
            const auto d = rng.below(f.time_count() + 1);
            values.push_back(d == f.time_count() ? kInf : TimePoint(d));
        }
        for (std::size_t i = 0; i < f.time_count() * f.atom_count(); ++i) {
            cells.push_back(static_cast<std::uint8_t>(rng.below(2)));
        }
        const RandomTime tau(values);
        const BinaryProcess x(f.time_count(), f.atom_count(), cells);
        EXPECT_EQ(is_stopping_time(tau, f).holds,
                  is_stopping_time(testing::relabel(tau, perm), g).holds);
        EXPECT_EQ(is_stopping_process(x, f).holds,
                  is_stopping_process(testing::relabel(x, perm), g).holds);
    }
}

}  // namespace
}  // namespace stoptime
