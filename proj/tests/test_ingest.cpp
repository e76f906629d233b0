#include <gtest/gtest.h>

#include "support.hpp"

using namespace gravity;

namespace {

std::vector<TradeFlowRecord> trade(const std::string& text) {
  std::istringstream in(text);
  return read_trade_csv(in);
}

std::vector<IndicatorRecord> indicators(const std::string& text) {
  std::istringstream in(text);
  return read_indicator_csv(in);
}

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const DataError& e) {
    return e.what();
  }
  return "";
}

/// Small raw universe: PER exporting to BRA, CHN and ARG over 2000..2006.
struct Raw {
  std::vector<TradeFlowRecord> flows;
  std::vector<IndicatorRecord> ind;
  std::vector<PairStaticRecord> statics;
  MembershipTable members;
};

Raw raw_universe() {
  Raw r;
  const std::vector<std::string> partners{"BRA", "CHN", "ARG"};
  for (int y = 2000; y <= 2006; ++y) {
    double k = 1.0;
    for (const auto& p : partners) {
      r.flows.push_back({"PER", p, y, 1e8 * k * (1.0 + 0.1 * (y - 2000))});
      k += 1.0;
    }
    for (const auto& c : {"PER", "BRA", "CHN", "ARG"}) {
      const double s = c[0] == 'P' ? 1.0 : 2.0 + (c[0] == 'C');
      r.ind.push_back({c, y, Indicator::gdp_usd, 5e10 * s * (1.0 + 0.03 * (y - 2000))});
      r.ind.push_back({c, y, Indicator::gnipc_usd, 3000.0 * s});
      r.ind.push_back({c, y, Indicator::gdppc_usd, 3500.0 * s + y});
      r.ind.push_back({c, y, Indicator::fx_rate, 3.4 * s});
      r.ind.push_back({c, y, Indicator::cpi_index, 100.0 + (y - 2000) * s});
      r.ind.push_back({c, y, Indicator::inflation_rate, 0.033});
    }
  }
  r.statics = {{"BRA", 3163.0, 0, 1}, {"CHN", 16700.0, 0, 0}, {"ARG", 3150.0, 1, 0}};
  r.members.add({Organization::MERCOSUR, "PER", 2003, MembershipStatus::associate});
  r.members.add({Organization::MERCOSUR, "BRA", 1991, MembershipStatus::member});
  r.members.add({Organization::MERCOSUR, "ARG", 1991, MembershipStatus::member});
  r.members.add({Organization::APEC, "PER", 1998, MembershipStatus::member});
  r.members.add({Organization::APEC, "CHN", 1991, MembershipStatus::member});
  return r;
}

AssembledPanel assemble(const Raw& r, Variant v, YearWindow w = {2000, 2006}) {
  return assemble_gravity_panel(r.flows, r.ind, r.statics, r.members, w, v);
}

double value_at(const PanelDataset& p, const std::string& var, const std::string& partner, int year) {
  const auto e = p.entity_index(EntityId{"PER", partner});
  const auto t = p.time_index(TimeIndex{year});
  if (!e || !t) return std::numeric_limits<double>::quiet_NaN();
  const auto& v = p.variable(var);
  const auto c = p.cell(*e, *t);
  return v.state[c] == CellState::present ? v.values[c] : std::numeric_limits<double>::quiet_NaN();
}

}  // namespace

TEST(ReadTrade, ParsesRow) {
  const auto r = trade("reporter,partner,year,export_value_usd\nPER,CHN,2012,7849000000\n");
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].reporter, "PER");
  EXPECT_EQ(r[0].partner, "CHN");
  EXPECT_EQ(r[0].year, 2012);
  EXPECT_EQ(r[0].export_value, 7.849e9);
}

TEST(ReadTrade, MalformedYearCitesLine) {
  const auto msg = error_of([] { trade("reporter,partner,year,export_value_usd\nPER,CHN,20x2,1\n"); });
  EXPECT_NE(msg.find("line 2"), std::string::npos) << msg;
  EXPECT_NE(msg.find("year"), std::string::npos);
}

TEST(ReadTrade, ValidationErrors) {
  EXPECT_NE(error_of([] { trade("reporter,partner,year,export_value_usd\nPER,CHN,2012,-5\n"); }).find("negative"),
            std::string::npos);
  EXPECT_NE(error_of([] { trade("reporter,partner,year\nPER,CHN,2012\n"); }).find("export_value_usd"),
            std::string::npos);
  EXPECT_THROW(trade("reporter,partner,year,export_value_usd\nPER,chn,2012,1\n"), DataError);
  EXPECT_THROW(trade("reporter,partner,year,export_value_usd\nPER,CHN,2012,1\nPER,CHN,2012,2\n"), DataError);
  EXPECT_THROW(trade("reporter,partner,year,export_value_usd\nPER,CHN,2012,1e400\n"), DataError);
}

TEST(ReadIndicators, ParsesAndRejectsEmptyYear) {
  const auto r = indicators("country,year,indicator,value\nPER,2015,gdp_usd,189800000000\n");
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0], (IndicatorRecord{"PER", 2015, Indicator::gdp_usd, 1.898e11}));
  const auto msg = error_of([] { indicators("country,year,indicator,value\nCHL,,9999,\n"); });
  EXPECT_NE(msg.find("empty value in column 'year'"), std::string::npos) << msg;
  EXPECT_THROW(indicators("country,year,indicator,value\nPER,2015,gdp_usd,0\n"), DataError);
  EXPECT_THROW(indicators("country,year,indicator,value\nPER,2015,population,1\n"), DataError);
  EXPECT_NO_THROW(indicators("country,year,indicator,value\nPER,2015,inflation_rate,-0.01\n"));
}

TEST(ReadPairStatic, ParsesFlags) {
  std::istringstream in("partner,distance_km,common_language,common_border\nBRA,3163,1,1\n");
  const auto r = read_pair_static_csv(in);
  ASSERT_EQ(r.size(), 1u);
  EXPECT_EQ(r[0].distance_km, 3163.0);
  EXPECT_EQ(r[0].common_language, 1);
  EXPECT_EQ(r[0].common_border, 1);
  std::istringstream bad("partner,distance_km,common_language,common_border\nBRA,3163,2,1\n");
  EXPECT_THROW(read_pair_static_csv(bad), DataError);
  std::istringstream zero("partner,distance_km,common_language,common_border\nBRA,0,1,1\n");
  EXPECT_THROW(read_pair_static_csv(zero), DataError);
}

TEST(ReadMemberships, DuplicatesAndStatus) {
  std::istringstream ok("organization,country,accession_year,status\nMERCOSUR,PER,2003,associate\n");
  const auto t = read_membership_csv(ok);
  EXPECT_EQ(t.accession(Organization::MERCOSUR, "PER"), 2003);
  std::istringstream dup(
      "organization,country,accession_year,status\nCAN,PER,1969,member\nCAN,PER,1970,member\n");
  EXPECT_THROW(read_membership_csv(dup), DataError);
  std::istringstream bad("organization,country,accession_year,status\nCAN,PER,1969,observer\n");
  EXPECT_THROW(read_membership_csv(bad), DataError);
}

TEST(RealFx, Examples) {
  EXPECT_EQ(compute_real_fx(3.3, 3.3, 110.0, 110.0), 1.0);
  EXPECT_DOUBLE_EQ(compute_real_fx(1.5, 3.0, 100.0, 100.0), 2.0);
  EXPECT_DOUBLE_EQ(compute_real_fx(3.4, 6.2, 120.0, 95.0), compute_real_fx(3.4, 6.2, 240.0, 190.0));
  EXPECT_THROW(compute_real_fx(0.0, 1.0, 1.0, 1.0), DataError);
  EXPECT_THROW(compute_real_fx(1.0, 1.0, -1.0, 1.0), DataError);
}

TEST(Assemble, MercosurDummySwitchesOnWithPeru) {
  const auto a = assemble(raw_universe(), Variant::GMP);
  EXPECT_EQ(value_at(a.panel, "mercosur", "BRA", 2002), 0.0);
  for (int y = 2003; y <= 2006; ++y) EXPECT_EQ(value_at(a.panel, "mercosur", "BRA", y), 1.0);
  EXPECT_EQ(value_at(a.panel, "mercosur", "CHN", 2005), 0.0);
  EXPECT_EQ(value_at(a.panel, "apec", "CHN", 1999 + 1), 1.0);
}

TEST(Assemble, IflIsOnePlusInflation) {
  const auto a = assemble(raw_universe(), Variant::CTP);
  EXPECT_DOUBLE_EQ(value_at(a.panel, "ifl", "CHN", 2004), 1.033);
  EXPECT_EQ(value_at(a.panel, "chn", "CHN", 2004), 1.0);
  EXPECT_EQ(value_at(a.panel, "chn", "BRA", 2004), 0.0);
}

TEST(Assemble, DerivedVariables) {
  const auto r = raw_universe();
  const auto a = assemble(r, Variant::GMP);
  // BRA scale 2: gdppc 7000 + y vs PER 3500 + y
  EXPECT_DOUBLE_EQ(value_at(a.panel, "gdppcdif", "BRA", 2004), 3500.0);
  EXPECT_DOUBLE_EQ(value_at(a.panel, "fx", "BRA", 2004), compute_real_fx(3.4, 6.8, 104.0, 108.0));
  EXPECT_EQ(value_at(a.panel, "distance", "BRA", 2001), 3163.0);
  EXPECT_EQ(value_at(a.panel, "border", "BRA", 2001), 1.0);
}

TEST(Assemble, EqualGdppcGivesZeroThatFailsLog) {
  auto r = raw_universe();
  for (auto& i : r.ind)
    if (i.indicator == Indicator::gdppc_usd && i.country == "CHN") i.value = 3500.0 + i.year;
  const auto a = assemble(r, Variant::GMP);
  EXPECT_EQ(value_at(a.panel, "gdppcdif", "CHN", 2003), 0.0);
  const auto tr = TransformSpec::log_of("gdppcdif");
  EXPECT_THROW(apply_transform(a.panel, tr), DataError);

  ModelSpec m;
  m.dependent = parse_term("log(exports)");
  m.regressors = {parse_term("log(gdp_importer)"), parse_term("log(gdppcdif)")};
  const auto p = design_matrix(prepare_model(a.panel, m, DomainPolicy::mask), m);
  EXPECT_EQ(p.drop_log.size(), 7u);
  for (const auto& d : p.drop_log) EXPECT_EQ(d.reason, "outside log domain: gdppcdif");
}

TEST(Assemble, WarningsForUnknownPartnersAndIncompleteRows) {
  auto r = raw_universe();
  r.flows.push_back({"PER", "XYZ", 2004, 1e6});
  std::erase_if(r.ind, [](const IndicatorRecord& i) {
    return i.country == "ARG" && i.year == 2005 && i.indicator == Indicator::fx_rate;
  });
  const auto a = assemble(r, Variant::GMP);
  std::vector<std::string> lines;
  for (const auto& w : a.warnings) lines.push_back(w.line());
  EXPECT_NE(std::find(lines.begin(), lines.end(), "WARN ingest unknown_partner PER-XYZ has no indicator data"),
            lines.end());
  EXPECT_NE(std::find(lines.begin(), lines.end(), "WARN ingest incomplete_row PER-ARG 2005 missing=fx"),
            lines.end());
  EXPECT_FALSE(a.panel.entity_index(EntityId{"PER", "XYZ"}).has_value());
}

TEST(Assemble, JoinCompleteness) {
  auto r = raw_universe();
  std::erase_if(r.flows, [](const TradeFlowRecord& f) { return f.partner == "CHN" && f.year == 2002; });
  std::erase_if(r.ind, [](const IndicatorRecord& i) { return i.country == "BRA" && i.year >= 2005; });
  for (auto v : {Variant::GMP, Variant::CTP}) {
    const auto a = assemble(r, v);
    const auto& p = a.panel;
    const auto names = variant_variables(v);
    for (std::size_t e = 0; e < p.n_entities(); ++e)
      for (std::size_t t = 0; t < p.n_times(); ++t) {
        std::size_t present = 0;
        for (const auto& n : names) present += p.variable(n).state[p.cell(e, t)] == CellState::present;
        EXPECT_TRUE(present == 0 || present == names.size()) << p.entities()[e].str() << " " << t;
      }
    EXPECT_TRUE(std::isnan(value_at(p, "exports", "CHN", 2002)));
    EXPECT_TRUE(std::isnan(value_at(p, "exports", "BRA", 2005)));
  }
}

TEST(Assemble, MembershipDummiesAreMonotone) {
  auto r = raw_universe();
  r.members.add({Organization::CAN, "PER", 2001, MembershipStatus::member});
  r.members.add({Organization::CAN, "ARG", 2004, MembershipStatus::associate});
  const auto a = assemble(r, Variant::GMP);
  for (const char* org : {"apec", "can", "mercosur"})
    for (const char* partner : {"BRA", "CHN", "ARG"}) {
      double prev = 0.0;
      for (int y = 2000; y <= 2006; ++y) {
        const double v = value_at(a.panel, org, partner, y);
        EXPECT_GE(v, prev) << org << " " << partner << " " << y;
        prev = v;
      }
    }
}

TEST(Assemble, VariantRules) {
  auto r = raw_universe();
  const auto rtp = assemble(r, Variant::RTP);
  EXPECT_FALSE(rtp.panel.entity_index(EntityId{"PER", "CHN"}).has_value());
  EXPECT_FALSE(rtp.panel.has("gnipc_exporter"));
  std::erase_if(r.ind, [](const IndicatorRecord& i) { return i.indicator == Indicator::inflation_rate; });
  EXPECT_THROW(assemble(r, Variant::CTP), DataError);
  std::erase_if(r.ind, [](const IndicatorRecord& i) { return i.country == "PER"; });
  EXPECT_THROW(assemble(r, Variant::GMP), DataError);
}
