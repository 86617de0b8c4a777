#include <gtest/gtest.h>

#include <sstream>

#include "otm/dataset.hpp"

using otm::FrequencyGroup;

namespace {

otm::Dataset parse(const std::string &text, otm::DatasetReadOptions options = {}) {
	std::istringstream in(text);
	return otm::read_dataset(in, options);
}

std::size_t error_line(const std::string &text) {
	try {
		parse(text);
	} catch (const otm::DatasetError &ex) {
		return ex.line();
	}
	return 0;
}

} // namespace

TEST(Dataset, ParsesRows) {
	const auto d = parse("id,group,period,h,n,values\n"
	                     "a,Yearly,1,2,3,1,2,3,4,5\n"
	                     "b,quarterly,,,8,1,2,3,4,5,6,7,8,9,10,11,12,13,14,15,16\n");
	ASSERT_EQ(d.entries.size(), 2u);
	const auto &a = d.entries[0];
	EXPECT_EQ(a.series.id(), "a");
	EXPECT_EQ(a.group, FrequencyGroup::yearly);
	EXPECT_EQ(a.horizon, 2);
	EXPECT_EQ(std::vector<double>(a.series.values().begin(), a.series.values().end()), (std::vector<double>{1, 2, 3}));
	EXPECT_EQ(a.actuals, (std::vector<double>{4, 5}));
	const auto &b = d.entries[1];
	EXPECT_EQ(b.series.period(), 4);
	EXPECT_EQ(b.horizon, 8);
	EXPECT_EQ(b.series.size(), 8u);
}

TEST(Dataset, ReportsLineNumbers) {
	const std::string header = "id,group,period,h,n,values\n";
	EXPECT_EQ(error_line(header + "a,Yearly,1,2,3,1,2,3,4,5\na,Yearly,1,2,3,1,2,3,4\n"), 3u);
	EXPECT_EQ(error_line(header + "a,Weekly,1,2,3,1,2,3,4,5\n"), 2u);
	EXPECT_EQ(error_line(header + "a,Yearly,1,2,3,1,x,3,4,5\n"), 2u);
	EXPECT_EQ(error_line(header + "a,Yearly,0,2,3,1,2,3,4,5\n"), 2u);
	EXPECT_EQ(error_line(header + "a,Yearly,1,2,4,1,2,3,4,5\n"), 2u);
	EXPECT_EQ(error_line("a,Yearly,1,2,3,1,2,3,4,5\n"), 1u);
	EXPECT_EQ(error_line(""), 1u);
}

TEST(Dataset, MissingActualsOnlyWhenAllowed) {
	const std::string text = "id,group,period,h,n,values\na,Yearly,1,2,3,1,2,3\n";
	EXPECT_THROW(parse(text), otm::DatasetError);
	const auto d = parse(text, {.allow_missing_actuals = true});
	EXPECT_TRUE(d.entries[0].actuals.empty());
}

TEST(Dataset, RoundTrip) {
	const auto d = otm::synthesize(50, 11);
	std::ostringstream out;
	otm::write_dataset(d, out);
	EXPECT_EQ(parse(out.str()), d);
}

TEST(Dataset, SynthesizeIsSeededAndValid) {
	const auto a = otm::synthesize(40, 1);
	EXPECT_EQ(a, otm::synthesize(40, 1));
	EXPECT_NE(a, otm::synthesize(40, 2));
	for (const auto &e : a.entries) {
		EXPECT_EQ(e.series.period(), otm::default_period(e.group));
		EXPECT_EQ(static_cast<int>(e.actuals.size()), e.horizon);
		for (double v : e.series.values()) {
			EXPECT_GT(v, 0.0);
		}
	}
	EXPECT_EQ(a.entries[0].group, FrequencyGroup::yearly);
	EXPECT_EQ(a.entries[2].group, FrequencyGroup::monthly);
}
