#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "otm/groe.hpp"
#include "otm/theta.hpp"

using otm::Approach;
using otm::CostKind;
using otm::ForecasterSpec;
using otm::GroeConfig;
using otm::Horizon;

namespace {

const otm::Candidate kNaive = [](std::span<const double> prefix, Horizon h) {
	return std::vector<double>(h.size(), prefix.back());
};

otm::Candidate theta_candidate(double theta, const ForecasterSpec &spec) {
	return [theta, spec](std::span<const double> prefix, Horizon h) {
		return otm::otm_forecast(prefix, theta, h, spec);
	};
}

oracle::Forecaster theta_oracle(double theta, const ForecasterSpec &spec) {
	return [theta, spec](const std::vector<double> &prefix, int h) {
		return otm::otm_forecast(prefix, theta, Horizon(h), spec);
	};
}

const oracle::Cost kSquared = [](double a, double b) { return (a - b) * (a - b); };

} // namespace

TEST(Cost, DefinitionsAndSymmetry) {
	EXPECT_EQ(otm::cost(CostKind::se, 3, 1), 4.0);
	EXPECT_EQ(otm::cost(CostKind::ae, 1, 3), 2.0);
	EXPECT_EQ(otm::cost(CostKind::sape, 3, 1), 1.0);
	EXPECT_EQ(otm::cost(CostKind::sape, 0, 0), 0.0);
	EXPECT_EQ(otm::cost(CostKind::sape, 0, 5), 2.0);
	std::mt19937_64 rng(1);
	std::uniform_real_distribution<double> u(-10, 10);
	for (int i = 0; i < 1000; ++i) {
		const double a = u(rng), b = u(rng);
		for (CostKind k : {CostKind::se, CostKind::ae, CostKind::sape}) {
			EXPECT_EQ(otm::cost(k, a, b), otm::cost(k, b, a));
			EXPECT_GE(otm::cost(k, a, b), 0.0);
		}
	}
	EXPECT_EQ(otm::parse_cost("sape"), CostKind::sape);
	EXPECT_THROW(otm::parse_cost("mse"), std::invalid_argument);
}

TEST(PMax, Examples) {
	EXPECT_EQ(otm::p_max(64, 25, 13), 4); // origins 25, 38, 51, 64
	EXPECT_EQ(otm::p_max(10, 9, 1), 2);
	EXPECT_EQ(otm::p_max(10, 2, 3), 3); // origins 2, 5, 8
	EXPECT_THROW(otm::p_max(10, 1, 1), std::domain_error);
	EXPECT_THROW(otm::p_max(10, 10, 1), std::domain_error);
	EXPECT_THROW(otm::p_max(10, 3, 0), std::domain_error);
}

TEST(PMax, MatchesOriginEnumeration) {
	for (int n = 3; n <= 60; ++n) {
		for (int n1 = 2; n1 < n; ++n1) {
			for (int m = 1; m <= n; ++m) {
				ASSERT_EQ(otm::p_max(n, n1, m), oracle::count_origins(n, n1, m)) << n << ' ' << n1 << ' ' << m;
			}
		}
	}
}

TEST(OriginSchedule, Examples) {
	EXPECT_EQ(otm::origin_schedule({3, 13, 13, 25}, 64), (std::vector<int>{25, 38, 51}));
	EXPECT_EQ(otm::origin_schedule({1, 5, 5, 7}, 20), (std::vector<int>{7}));
	EXPECT_EQ(otm::origin_schedule({4, 2, 1, 3}, 12), (std::vector<int>{3, 5, 7, 9}));
	EXPECT_THROW(otm::origin_schedule({5, 13, 13, 25}, 64), std::domain_error);
}

TEST(GroeLoss, HandEnumeratedNaive) {
	// Origins 2 and 4: (3-2)^2 + (4-2)^2 + (5-4)^2 + (6-4)^2 = 10.
	const std::vector<double> y{1, 2, 3, 4, 5, 6};
	EXPECT_EQ(otm::groe_loss(y, kNaive, {2, 2, 2, 2}, CostKind::se), 10.0);
}

TEST(GroeLoss, SpecialCasesAgainstDirectLosses) {
	std::mt19937_64 rng(5);
	const auto spec = ForecasterSpec::of(otm::Family::ses);
	for (int trial = 0; trial < 10; ++trial) {
		const auto y = oracle::random_walk(rng, 30 + static_cast<std::size_t>(trial));
		const int n = static_cast<int>(y.size());
		for (double theta : {1.0, 2.5}) {
			const auto cand = theta_candidate(theta, spec);
			const auto ref = theta_oracle(theta, spec);

			const auto fixed = otm::approach_config(Approach::a, n, Horizon(6));
			const double direct_fixed = oracle::fixed_origin_loss(y, 6, ref, kSquared);
			EXPECT_NEAR(otm::groe_loss(y, cand, fixed, CostKind::se), direct_fixed, 1e-10 * direct_fixed);

			const int n1 = n - 8;
			const GroeConfig rolling{otm::p_max(n, n1, 1), 1, n - n1, n1};
			const double direct_rolling = oracle::rolling_origin_loss(y, n1, ref, kSquared);
			EXPECT_NEAR(otm::groe_loss(y, cand, rolling, CostKind::se), direct_rolling, 1e-10 * direct_rolling);

			const GroeConfig one_step{otm::p_max(n, 2, 1), 1, 1, 2};
			const double direct_one_step = oracle::one_step_loss(y, ref, kSquared);
			EXPECT_NEAR(otm::groe_loss(y, cand, one_step, CostKind::se), direct_one_step, 1e-10 * direct_one_step);
		}
	}
}

TEST(GroeLoss, MonotoneInOrigins) {
	std::mt19937_64 rng(6);
	const auto y = oracle::random_walk(rng, 40);
	const auto cand = theta_candidate(2.0, ForecasterSpec::of(otm::Family::ses));
	const int pmax = otm::p_max(40, 20, 3);
	double previous = 0;
	for (int p = 1; p <= pmax; ++p) {
		const double loss = otm::groe_loss(y, cand, {p, 3, 5, 20}, CostKind::ae);
		EXPECT_GE(loss, previous);
		previous = loss;
	}
}

TEST(GroeLoss, EmptyTrailingOriginContributesNothing) {
	std::mt19937_64 rng(7);
	const auto y = oracle::random_walk(rng, 22);
	// n1 = 10, m = 4: origins 10, 14, 18, 22; the last one has no data after it.
	const auto cand = theta_candidate(1.5, ForecasterSpec::of(otm::Family::ses));
	EXPECT_EQ(otm::groe_loss(y, cand, {4, 4, 4, 10}, CostKind::se), otm::groe_loss(y, cand, {3, 4, 4, 10}, CostKind::se));
}

TEST(GroeLoss, FailureIsTaggedWithTheOrigin) {
	const std::vector<double> y{1, 2, 3, 4, 5, 6, 7, 8};
	const otm::Candidate picky = [](std::span<const double> prefix, Horizon h) {
		if (prefix.size() == 5) {
			throw std::runtime_error("boom");
		}
		return std::vector<double>(h.size(), 0.0);
	};
	try {
		otm::groe_loss(y, picky, {3, 1, 2, 3}, CostKind::se);
		FAIL() << "expected EvaluationError";
	} catch (const otm::EvaluationError &ex) {
		EXPECT_EQ(ex.origin(), 5);
	}
}

TEST(ApproachConfig, TableRows) {
	EXPECT_EQ(otm::approach_config(Approach::a, 50, Horizon(8)), (GroeConfig{1, 8, 8, 42}));
	EXPECT_EQ(otm::approach_config(Approach::b, 50, Horizon(8)), (GroeConfig{2, 4, 8, 42}));
	EXPECT_EQ(otm::approach_config(Approach::c, 50, Horizon(8)), (GroeConfig{3, 3, 8, 42}));
	EXPECT_EQ(otm::approach_config(Approach::d, 50, Horizon(8)), (GroeConfig{8, 1, 8, 42}));
	EXPECT_EQ(otm::approach_config(Approach::e, 20, Horizon(6)), (GroeConfig{2, 6, 6, 8}));
	EXPECT_EQ(otm::approach_config(Approach::f, 50, Horizon(8)), (GroeConfig{4, 4, 8, 34}));
	EXPECT_EQ(otm::approach_config(Approach::g, 50, Horizon(8)), (GroeConfig{6, 3, 8, 34}));
	EXPECT_EQ(otm::approach_config(Approach::h, 50, Horizon(8)), (GroeConfig{8, 1, 8, 34}));
}

TEST(ApproachConfig, Clamps) {
	// Raw n1 = 14 - 12 = 2 is raised to 4; p_max(14, 4, 3) = 4.
	const auto f = otm::approach_config(Approach::f, 14, Horizon(6));
	EXPECT_EQ(f.n1, 4);
	EXPECT_EQ(f.m, 3);
	EXPECT_EQ(f.p, 4);
	// (g): p_max(20, 8, 2) = 7, so p stays at 6.
	EXPECT_EQ(otm::approach_config(Approach::g, 20, Horizon(6)).p, 6);
	// (e) on a short series: p_max(9, 4, 4) = 2.
	EXPECT_EQ(otm::approach_config(Approach::e, 9, Horizon(4)).p, 2);
	// Everything valid for every approach on moderately long series.
	for (Approach a : otm::kAllApproaches) {
		for (int n = 14; n < 80; ++n) {
			for (int h : {6, 8, 18}) {
				if (n <= h) {
					continue;
				}
				const auto cfg = otm::approach_config(a, n, Horizon(h));
				if (cfg.n1 < n) {
					EXPECT_NO_THROW(otm::validate(cfg, n));
					EXPECT_LE(cfg.p, h);
				}
			}
		}
	}
	EXPECT_THROW(otm::approach_config(Approach::a, 6, Horizon(6)), std::domain_error);
}

TEST(ApproachNames, RoundTrip) {
	for (Approach a : otm::kAllApproaches) {
		EXPECT_EQ(otm::parse_approach(otm::to_char(a)), a);
	}
	EXPECT_EQ(otm::parse_approach('D'), Approach::d);
	EXPECT_THROW(otm::parse_approach('z'), std::invalid_argument);
}

TEST(EstimateTheta, SingletonGrid) {
	std::mt19937_64 rng(8);
	const auto y = oracle::random_walk(rng, 30);
	EXPECT_EQ(otm::estimate_theta(y, otm::ThetaGrid::from({2.0}), otm::approach_config(Approach::a, 30, Horizon(6)),
	                              CostKind::se, ForecasterSpec::of(otm::Family::ses)),
	          2.0);
}

TEST(EstimateTheta, ConstantSeriesTiesToSmallestTheta) {
	const std::vector<double> y(24, 7.0);
	for (Approach a : otm::kAllApproaches) {
		EXPECT_EQ(otm::estimate_theta(y, otm::ThetaGrid::standard(), otm::approach_config(a, 24, Horizon(6)),
		                              CostKind::se, ForecasterSpec::of(otm::Family::ses)),
		          1.0);
	}
}

TEST(EstimateTheta, BruteForceOracle) {
	std::mt19937_64 rng(9);
	const auto spec = ForecasterSpec::of(otm::Family::ses);
	const auto grid = otm::ThetaGrid::standard();
	for (int trial = 0; trial < 10; ++trial) {
		const auto y = oracle::random_walk(rng, 40);
		const auto config = otm::approach_config(Approach::a, 40, Horizon(6));
		double best = INFINITY, best_theta = 0;
		for (double theta : grid.candidates) {
			const double loss = oracle::generalised_loss(y, config.p, config.m, config.H, config.n1,
			                                             theta_oracle(theta, spec), kSquared);
			if (loss < best) {
				best = loss;
				best_theta = theta;
			}
		}
		const auto est = otm::estimate_theta_detailed(y, grid, config, CostKind::se, spec);
		EXPECT_EQ(est.theta, best_theta);
		EXPECT_NEAR(*std::min_element(est.losses.begin(), est.losses.end()), best, 1e-10 * best);
		EXPECT_NE(std::find(grid.candidates.begin(), grid.candidates.end(), est.theta), grid.candidates.end());
	}
}

TEST(EstimateTheta, ScaleInvariantArgminWithFixedAlpha) {
	std::mt19937_64 rng(10);
	auto spec = ForecasterSpec::of(otm::Family::ses);
	spec.alpha = 0.4;
	for (int trial = 0; trial < 10; ++trial) {
		const auto y = oracle::random_walk(rng, 36);
		std::vector<double> scaled = y;
		for (auto &v : scaled) {
			v *= 8.0; // exact in binary, so losses scale exactly
		}
		for (CostKind cost : {CostKind::se, CostKind::ae}) {
			const auto config = otm::approach_config(Approach::c, 36, Horizon(8));
			const auto a = otm::estimate_theta_detailed(y, otm::ThetaGrid::standard(), config, cost, spec);
			const auto b = otm::estimate_theta_detailed(scaled, otm::ThetaGrid::standard(), config, cost, spec);
			EXPECT_EQ(a.theta, b.theta);
			const double factor = cost == CostKind::se ? 64.0 : 8.0;
			for (std::size_t i = 0; i < a.losses.size(); ++i) {
				EXPECT_NEAR(b.losses[i], factor * a.losses[i], 1e-9 * b.losses[i]);
			}
		}
	}
}

TEST(EstimateTheta, AllCandidatesFailing) {
	// Holt needs three points; a first origin of 2 makes every candidate fail.
	std::mt19937_64 rng(12);
	const auto y = oracle::random_walk(rng, 10);
	EXPECT_THROW(otm::estimate_theta(y, otm::ThetaGrid::standard(), {1, 1, 1, 2}, CostKind::se,
	                                 ForecasterSpec::of(otm::Family::holt)),
	             otm::EvaluationError);
}

TEST(ThetaGrid, Validation) {
	EXPECT_EQ(otm::ThetaGrid::standard().candidates.size(), 9u);
	EXPECT_THROW(otm::ThetaGrid::from({}), std::invalid_argument);
	EXPECT_THROW(otm::ThetaGrid::from({0.5, 2}), std::invalid_argument);
	EXPECT_THROW(otm::ThetaGrid::from({2, 1.5}), std::invalid_argument);
}
