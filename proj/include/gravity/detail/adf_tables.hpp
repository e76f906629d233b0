#pragma once
// Generated by tools/gen_unitroot_tables.cpp; do not edit.
// Mirrors data/adf_moments.csv and data/adf_quantiles.csv.

#include <array>
#include <cstdint>

namespace gravity::detail::adf_tables {

inline constexpr std::uint64_t kSeed = 20160101ULL;
inline constexpr int kReplications = 100000;
inline constexpr std::array<double, 34> kProbabilities = {0.0005, 0.001, 0.0025, 0.005, 0.01, 0.025, 0.05, 0.075, 0.1, 0.125, 0.15, 0.2, 0.25, 0.3, 0.35, 0.4, 0.45, 0.5, 0.55, 0.6, 0.65, 0.7, 0.75, 0.8, 0.85, 0.875, 0.9, 0.925, 0.95, 0.975, 0.99, 0.995, 0.999, 0.9995};

struct Cell {
  int deterministics;  // 0 = constant, 1 = constant + trend
  int lags;
  int length;          // series length T (levels)
  double mean;
  double variance;
  std::array<double, kProbabilities.size()> quantiles;
};

inline constexpr std::array<Cell, 53> kCells{{
    {0, 0, 8, -1.511934451, 1.384853342,
     {-9.099377511, -7.929686262, -6.647874972, -5.804869634, -5.02464701, -4.117018023, -3.478487394, -3.121143633, -2.876758091, -2.685632814, -2.534157785, -2.292281434, -2.106836583, -1.948685543, -1.805881484, -1.679890128, -1.560480786, -1.445165403, -1.334845949, -1.222916429, -1.101794017, -0.9636340412, -0.8116988972, -0.6390767142, -0.4345049894, -0.3129285784, -0.1744009924, -7.175293514e-05, 0.2341917771, 0.5917485915, 1.068218585, 1.446831443, 2.482739539, 2.947182829}},
    {0, 0, 10, -1.513920804, 1.147994386,
     {-7.533635542, -6.653638285, -5.749612928, -5.087383165, -4.525101222, -3.810039502, -3.300497217, -2.999337723, -2.787842041, -2.624504234, -2.492656416, -2.276310069, -2.099824931, -1.952845268, -1.821028909, -1.699211852, -1.586817497, -1.47645133, -1.368641585, -1.258537072, -1.142907557, -1.01327279, -0.8657088754, -0.697865131, -0.4989297259, -0.3815689815, -0.2435852619, -0.07498729451, 0.1446594724, 0.491020419, 0.9380584258, 1.261872756, 2.077145387, 2.431093881}},
    {0, 0, 15, -1.513015402, 0.9345135097,
     {-5.78558243, -5.315035983, -4.804176513, -4.405821465, -4.029376438, -3.482703822, -3.094106293, -2.857575099, -2.685781072, -2.546618815, -2.431910445, -2.248303183, -2.090856228, -1.960074816, -1.839439416, -1.727021849, -1.619551299, -1.513448394, -1.409902676, -1.301687767, -1.18747038, -1.062945122, -0.9223715265, -0.7564834814, -0.5628271579, -0.4468963525, -0.3115344827, -0.1486716589, 0.07344568726, 0.4109604053, 0.8273337114, 1.108896579, 1.805357496, 2.08257373}},
    {0, 0, 20, -1.518340772, 0.858637043,
     {-5.330923172, -4.893649401, -4.461987579, -4.182267629, -3.854373726, -3.407151625, -3.030785056, -2.811686893, -2.64969441, -2.521079908, -2.41537423, -2.235127978, -2.087311391, -1.958039714, -1.840625771, -1.729387481, -1.624987992, -1.52324949, -1.420885602, -1.314030933, -1.205332331, -1.08212535, -0.9470027811, -0.7880348125, -0.598555369, -0.4878656174, -0.3599705162, -0.1983119337, 0.01513816584, 0.3424411224, 0.7435269217, 1.03437472, 1.598479881, 1.860394379}},
    {0, 0, 25, -1.528096592, 0.8277296479,
     {-5.006353879, -4.7320577, -4.337462988, -4.041453584, -3.737924162, -3.330517011, -3.00420938, -2.795773893, -2.644713271, -2.521501975, -2.417636916, -2.244260932, -2.101598822, -1.973142076, -1.858237654, -1.749602502, -1.645111701, -1.543430645, -1.439534448, -1.333906806, -1.222600975, -1.103303666, -0.9685407917, -0.8083086465, -0.6190375979, -0.4998525052, -0.3688068295, -0.2124219882, -0.0003668578141, 0.3239989579, 0.7324434239, 0.9931294624, 1.527930736, 1.750696534}},
    {0, 0, 50, -1.524279047, 0.7623860835,
     {-4.613659219, -4.385546445, -4.07453334, -3.861086623, -3.59090827, -3.214047506, -2.919977339, -2.735102853, -2.592698311, -2.478523727, -2.386430479, -2.221300464, -2.083697419, -1.964071442, -1.854891385, -1.749753568, -1.653323384, -1.552890222, -1.450517425, -1.346098118, -1.237329657, -1.118379203, -0.9842541407, -0.8309690853, -0.6432347195, -0.5309077172, -0.4003588367, -0.2427830452, -0.02895625107, 0.2790712806, 0.6611465732, 0.9348422174, 1.501924013, 1.700227542}},
    {0, 0, 100, -1.529665206, 0.7282700928,
     {-4.411947101, -4.211938558, -3.944326488, -3.732028949, -3.494305387, -3.165703647, -2.888592164, -2.70992565, -2.577523521, -2.468863432, -2.374992138, -2.217710885, -2.085875895, -1.969076881, -1.856685401, -1.755471039, -1.655067918, -1.559294584, -1.459640468, -1.359664295, -1.253433303, -1.138513958, -1.006974459, -0.852679723, -0.6674269304, -0.5584399367, -0.4295592646, -0.268040453, -0.05871054418, 0.2590304617, 0.6384495922, 0.9040184681, 1.393755575, 1.623410601}},
    {0, 0, 250, -1.533130222, 0.7136152935,
     {-4.260125326, -4.116351372, -3.87990858, -3.680939934, -3.449115555, -3.13963336, -2.874649005, -2.703946929, -2.571811751, -2.465800377, -2.374058818, -2.217456134, -2.089341866, -1.972336832, -1.864732993, -1.761323584, -1.662478658, -1.566128454, -1.467938528, -1.366151276, -1.257648725, -1.140939475, -1.01096119, -0.8580280096, -0.6758472327, -0.5655757167, -0.4396565753, -0.2796953627, -0.07410855659, 0.2431440515, 0.6047691461, 0.8694567828, 1.39981323, 1.553559279}},
    {0, 0, 500, -1.537346684, 0.7111730343,
     {-4.332415649, -4.113404613, -3.905801021, -3.67982942, -3.45508685, -3.132334811, -2.870109169, -2.700647538, -2.571204488, -2.469643441, -2.380479404, -2.222273883, -2.089687285, -1.973574149, -1.866757322, -1.766588542, -1.668994091, -1.571397559, -1.473282301, -1.371023717, -1.265101683, -1.149005702, -1.016940064, -0.8667089221, -0.6833874571, -0.5695134865, -0.4412143447, -0.2857539231, -0.07927191501, 0.2334212971, 0.609427649, 0.8673727928, 1.381941033, 1.603880374}},
    {0, 1, 8, -1.560704067, 3.198868338,
     {-19.12302409, -15.99959315, -11.82150743, -9.368458341, -7.324258899, -5.374869697, -4.219381721, -3.644399473, -3.250967083, -2.970388173, -2.757784478, -2.431239825, -2.187854885, -1.990032777, -1.820740764, -1.670446422, -1.53002656, -1.396740073, -1.260294268, -1.122160265, -0.9738474119, -0.8078650534, -0.6328405117, -0.4302392149, -0.1967419514, -0.05746653566, 0.1038486253, 0.305980249, 0.5837119034, 1.050369882, 1.673243921, 2.264173605, 3.968578146, 4.822018686}},
    {0, 1, 10, -1.494620477, 1.571653875,
     {-10.15861698, -8.495758868, -7.022814108, -6.041037018, -5.185868023, -4.165943941, -3.520103245, -3.151234816, -2.901606254, -2.719602316, -2.567996069, -2.328988195, -2.136600258, -1.973076423, -1.828687415, -1.698895845, -1.576541518, -1.458935407, -1.336875024, -1.208754523, -1.072330386, -0.9223878781, -0.7536746063, -0.5609915624, -0.3352396193, -0.2040651324, -0.05268543546, 0.1336893651, 0.3752709312, 0.7847060503, 1.300637681, 1.706075981, 2.769101295, 3.32001547}},
    {0, 1, 15, -1.497099227, 1.068400937,
     {-6.191526243, -5.687205754, -5.09885714, -4.622383502, -4.178578779, -3.581684115, -3.164768708, -2.909732271, -2.736362017, -2.590964629, -2.466934499, -2.269222766, -2.108283275, -1.970105277, -1.845871972, -1.732749142, -1.622258151, -1.514443791, -1.403163062, -1.289309411, -1.164209458, -1.026616174, -0.8731947715, -0.6960835804, -0.4772014247, -0.3492522843, -0.2025957719, -0.02662850782, 0.2083102794, 0.5715887544, 1.028075618, 1.359340472, 2.098749422, 2.537884171}},
    {0, 1, 20, -1.50592501, 0.9449086895,
     {-5.304102716, -5.03817815, -4.574728351, -4.261430777, -3.916008946, -3.435537498, -3.06952961, -2.845207711, -2.680273183, -2.544772536, -2.435388831, -2.253229808, -2.104944135, -1.97238001, -1.854903833, -1.744182546, -1.636384036, -1.530509921, -1.426628959, -1.316746732, -1.198715288, -1.064704063, -0.9148314463, -0.7434049275, -0.5376057926, -0.4125671416, -0.2708401377, -0.09431120996, 0.1375066625, 0.4906108998, 0.9155193371, 1.223114226, 1.914631732, 2.179109486}},
    {0, 1, 25, -1.505990158, 0.8738376003,
     {-5.048229515, -4.70998488, -4.368299098, -4.067785481, -3.755131838, -3.340623141, -2.997793123, -2.791852235, -2.636690607, -2.513760747, -2.406407275, -2.230086366, -2.091208876, -1.962244802, -1.849209591, -1.743424528, -1.639367364, -1.535683237, -1.432792216, -1.32770993, -1.213594751, -1.086352721, -0.9419474074, -0.7730428652, -0.5741769707, -0.453659771, -0.3116429204, -0.1384822661, 0.08930518278, 0.4474811068, 0.8674512267, 1.160066435, 1.770831318, 2.023665887}},
    {0, 1, 50, -1.527424961, 0.7826444466,
     {-4.589790587, -4.361321955, -4.06716151, -3.834255608, -3.581250986, -3.223802702, -2.935402036, -2.748769917, -2.610486405, -2.495615361, -2.400398355, -2.234010928, -2.095330292, -1.972644601, -1.86292288, -1.758472019, -1.657516446, -1.558208217, -1.459332054, -1.35624405, -1.247469916, -1.129032937, -0.9917690901, -0.8324859129, -0.6384446488, -0.5221725799, -0.3879756894, -0.2214350248, -0.001298617219, 0.3346172825, 0.7180490333, 1.00968401, 1.608566192, 1.889883741}},
    {0, 1, 100, -1.523765508, 0.7485411819,
     {-4.392064805, -4.220805829, -3.942572303, -3.724515163, -3.50842819, -3.177498077, -2.895448825, -2.717507134, -2.580671374, -2.474229815, -2.378173704, -2.218884229, -2.084443103, -1.964921042, -1.859065948, -1.757940778, -1.657688574, -1.558863082, -1.459603034, -1.357529094, -1.248039598, -1.128745033, -0.9961114156, -0.8442287452, -0.6515626516, -0.535401733, -0.4002532023, -0.2393274737, -0.02806742408, 0.3004501128, 0.6837969935, 0.9348151902, 1.472320365, 1.68623327}},
    {0, 1, 250, -1.531599313, 0.7218929019,
     {-4.349904483, -4.139121292, -3.889470284, -3.675109194, -3.44795948, -3.137917157, -2.865056983, -2.701592493, -2.575392437, -2.469924746, -2.378566492, -2.222336823, -2.091000835, -1.973589585, -1.865091632, -1.762330032, -1.663975085, -1.565235976, -1.468238515, -1.36792887, -1.260119505, -1.143287123, -1.011837631, -0.8575466348, -0.6710662486, -0.5579194363, -0.4258134075, -0.2643618979, -0.05768154106, 0.263507133, 0.6332243882, 0.8961815013, 1.427469058, 1.657419724}},
    {0, 1, 500, -1.530997065, 0.7211759797,
     {-4.354837576, -4.1472521, -3.89190907, -3.665430596, -3.444196064, -3.140763186, -2.877710849, -2.707395393, -2.580065913, -2.474000632, -2.378776094, -2.222010874, -2.088941814, -1.972369483, -1.860113633, -1.758376425, -1.658663208, -1.561315747, -1.463578906, -1.362650531, -1.255568301, -1.139817284, -1.010188599, -0.8572554086, -0.6666001047, -0.5591671067, -0.4310276424, -0.2735460042, -0.06609223426, 0.2538066465, 0.6194357508, 0.8611515106, 1.44035408, 1.639268707}},
    {0, 2, 8, -5.088084655, 79066.59488,
     {-985.1618985, -545.8537603, -216.5871748, -111.5276077, -55.55665345, -22.00208348, -10.98515168, -7.322726456, -5.473273718, -4.406812765, -3.704124668, -2.837752363, -2.339753835, -1.966822527, -1.689581804, -1.455253397, -1.258722487, -1.084208972, -0.9188053195, -0.7540723974, -0.5704420156, -0.3773762116, -0.160099125, 0.0816591684, 0.3814259001, 0.5812993017, 0.8349154052, 1.200885689, 1.882344011, 3.882864017, 9.98120628, 20.26048906, 101.9618232, 232.0184834}},
    {0, 2, 10, -1.320400087, 2.8351755,
     {-17.3247743, -14.47051033, -10.66683521, -8.313972837, -6.655128583, -4.840898304, -3.81374818, -3.310861789, -2.977745794, -2.731560443, -2.531440275, -2.234662323, -2.003517861, -1.813020049, -1.648383612, -1.498271091, -1.357492605, -1.224387536, -1.084863407, -0.943254311, -0.7895685642, -0.6160994702, -0.426564325, -0.2168916247, 0.03400256832, 0.1769537998, 0.3509886729, 0.5650119807, 0.8724987138, 1.383150287, 2.169419142, 2.879644917, 5.158169256, 6.531245816}},
    {0, 2, 15, -1.345194681, 1.231658473,
     {-6.661835182, -5.987742179, -5.266521102, -4.67278057, -4.174334227, -3.540246802, -3.082241302, -2.818600397, -2.633011555, -2.484607094, -2.364804903, -2.16468623, -1.99679806, -1.859288868, -1.7333696, -1.617938448, -1.506599356, -1.390296064, -1.272833273, -1.146758936, -1.007308736, -0.8524186068, -0.6812252491, -0.4840116185, -0.2575181331, -0.1148217248, 0.03974344029, 0.2341760343, 0.4958504572, 0.9114267083, 1.453233614, 1.873035751, 2.788385628, 3.204719693}},
    {0, 2, 20, -1.406116442, 1.021792468,
     {-5.465455515, -5.118847341, -4.560289498, -4.195388889, -3.837635638, -3.351122949, -2.987297722, -2.767294705, -2.604134137, -2.475569902, -2.363698793, -2.18210754, -2.032801716, -1.899500589, -1.782640482, -1.672226256, -1.566303315, -1.459992552, -1.350179122, -1.232374803, -1.102690159, -0.9625905234, -0.7990764877, -0.6109081058, -0.3916206185, -0.2641813619, -0.1113507173, 0.08222064658, 0.3306132876, 0.7121672618, 1.169417021, 1.522434747, 2.284735051, 2.635465662}},
    {0, 2, 25, -1.430681204, 0.9399451229,
     {-5.003784234, -4.740363994, -4.327761804, -4.026009527, -3.707616673, -3.280956909, -2.943647716, -2.731661935, -2.578076008, -2.458736734, -2.355994688, -2.183059362, -2.039885553, -1.91270915, -1.797646003, -1.689866874, -1.586742235, -1.48409964, -1.38333973, -1.274390729, -1.152921539, -1.017364379, -0.8578769572, -0.6732366693, -0.4593584898, -0.3309119864, -0.1800339884, 0.01012387483, 0.2544158032, 0.6383433784, 1.100561099, 1.453245308, 2.084447954, 2.300777617}},
    {0, 2, 50, -1.483039655, 0.8087301869,
     {-4.612555628, -4.369459244, -4.058217826, -3.803944605, -3.5458142, -3.186530469, -2.891727325, -2.706765644, -2.566794594, -2.452289133, -2.357591259, -2.198346832, -2.063162431, -1.940806218, -1.83109862, -1.728583277, -1.626480139, -1.527600692, -1.42701724, -1.322177809, -1.209488381, -1.085143616, -0.9443429862, -0.778710999, -0.576584238, -0.4574642037, -0.320324288, -0.1473577218, 0.0795790565, 0.4253702178, 0.8407029489, 1.139838635, 1.790525818, 2.075751599}},
    {0, 2, 100, -1.505564038, 0.7577065331,
     {-4.374860786, -4.189785764, -3.93710336, -3.738683618, -3.496587135, -3.156062606, -2.873446869, -2.698672335, -2.567829689, -2.455218323, -2.362677328, -2.205623974, -2.06939034, -1.952987025, -1.844559947, -1.743531358, -1.643712074, -1.544602898, -1.443988288, -1.343195183, -1.233634485, -1.115349321, -0.9796060322, -0.8183435454, -0.6245091472, -0.5093910997, -0.3759961102, -0.2107822099, 0.002711707503, 0.3366413351, 0.7219294085, 1.021006985, 1.636738616, 1.867689365}},
    {0, 2, 250, -1.527114684, 0.7237611389,
     {-4.238570661, -4.115753238, -3.889268355, -3.678966671, -3.445296355, -3.125185825, -2.870180056, -2.696894797, -2.571483134, -2.46793165, -2.377081868, -2.219568479, -2.086334048, -1.968314167, -1.859769118, -1.759361826, -1.661398997, -1.564267751, -1.465337105, -1.361972184, -1.256434376, -1.141346582, -1.008620045, -0.8510364837, -0.6590270172, -0.5500120112, -0.4162634113, -0.2600508283, -0.05296267859, 0.2706980944, 0.6401262135, 0.8992861934, 1.443697259, 1.604264493}},
    {0, 2, 500, -1.526472016, 0.7192413427,
     {-4.296427184, -4.098473714, -3.859729396, -3.660492825, -3.445655865, -3.128773502, -2.869440603, -2.703693166, -2.572463695, -2.464024342, -2.372363612, -2.216512666, -2.083714044, -1.967993918, -1.862196715, -1.75774163, -1.658367774, -1.561195438, -1.462965042, -1.361555747, -1.254445206, -1.135460226, -1.001148347, -0.8494464136, -0.6627388594, -0.5545766357, -0.4219812155, -0.2599361101, -0.05716854833, 0.2549780552, 0.6171383826, 0.8586097452, 1.41764566, 1.601297945}},
    {1, 0, 8, -2.183615309, 1.857124813,
     {-14.30562955, -12.28038195, -9.488055124, -7.893911814, -6.616119015, -5.300016526, -4.434573158, -3.985956013, -3.683561032, -3.448053786, -3.264112022, -2.966795296, -2.741789043, -2.555689365, -2.39769486, -2.260028354, -2.130981862, -2.01186001, -1.897602827, -1.785278359, -1.673856701, -1.552956538, -1.413251397, -1.253766764, -1.053955195, -0.9381203387, -0.8013258944, -0.6379361382, -0.4231416078, -0.07468643027, 0.377126114, 0.7047729293, 1.533784886, 1.967621541}},
    {1, 0, 10, -2.169643288, 1.243975141,
     {-9.308620219, -8.400171027, -7.078429342, -6.32238679, -5.603234475, -4.714071955, -4.078333167, -3.738398542, -3.501920858, -3.317077061, -3.169551345, -2.924840247, -2.728805472, -2.567327932, -2.419690692, -2.290151464, -2.172606227, -2.058164664, -1.951098808, -1.845007401, -1.736114254, -1.619678841, -1.496290174, -1.348806831, -1.166271668, -1.058612061, -0.9323727618, -0.776547379, -0.5701086272, -0.2498312322, 0.1630517662, 0.447255266, 1.196444565, 1.487990381}},
    {1, 0, 15, -2.164357715, 0.8989267694,
     {-6.876650866, -6.367108767, -5.736784031, -5.273574601, -4.811143941, -4.222199828, -3.780586373, -3.520325419, -3.33908972, -3.187703419, -3.069271858, -2.866833518, -2.701399218, -2.559144001, -2.43158877, -2.316512583, -2.209848085, -2.106408292, -2.005191595, -1.905375413, -1.799998662, -1.692323324, -1.576335209, -1.4418804, -1.277480436, -1.174910545, -1.052697225, -0.9035409758, -0.7047262723, -0.3984124139, -0.019621879, 0.2447618396, 0.8149438481, 1.104384557}},
    {1, 0, 20, -2.168457489, 0.7833760909,
     {-6.096242318, -5.688142056, -5.279033774, -4.893675557, -4.534809834, -4.057977168, -3.673073339, -3.44733724, -3.279639447, -3.145133068, -3.031962178, -2.849263085, -2.692127023, -2.557298602, -2.43595309, -2.328010089, -2.226616684, -2.129215842, -2.030980905, -1.933619553, -1.831141244, -1.725899016, -1.608268915, -1.479475389, -1.322475722, -1.225320011, -1.106371259, -0.963044282, -0.7724801602, -0.4781460589, -0.1254754062, 0.1306915143, 0.6511788236, 0.849640376}},
    {1, 0, 25, -2.173711008, 0.7346109994,
     {-5.76889173, -5.468970086, -5.05505422, -4.71789016, -4.406762642, -3.973813524, -3.625173949, -3.412901299, -3.254095202, -3.1268028, -3.017826305, -2.8401785, -2.693017407, -2.564633894, -2.448501658, -2.342028161, -2.239419225, -2.141373504, -2.044022299, -1.948344509, -1.847786002, -1.742032076, -1.628541065, -1.502011981, -1.345054726, -1.248452137, -1.135867315, -0.9969410469, -0.8041403467, -0.5223103832, -0.1766651322, 0.07731765166, 0.5993698959, 0.7718569793}},
    {1, 0, 50, -2.175808743, 0.6378609136,
     {-5.227255781, -4.973946174, -4.643115497, -4.398711002, -4.153739156, -3.793137692, -3.502036464, -3.32627098, -3.187070755, -3.072295783, -2.97432248, -2.811356059, -2.680142768, -2.561857709, -2.454157873, -2.350717897, -2.254947277, -2.160399791, -2.067648606, -1.974033696, -1.879042012, -1.776172949, -1.667095159, -1.544323984, -1.39635861, -1.307540827, -1.199439003, -1.065657091, -0.8837322175, -0.5843471061, -0.2388038124, 0.0208281054, 0.5495961459, 0.7467887268}},
    {1, 0, 100, -2.172389206, 0.5958192854,
     {-4.895526915, -4.719322196, -4.497307061, -4.259559394, -4.053100306, -3.718845193, -3.446081344, -3.274314185, -3.145148488, -3.041703452, -2.9499145, -2.797046291, -2.667778463, -2.552243311, -2.447741883, -2.350964534, -2.257954812, -2.165750156, -2.073392507, -1.979865594, -1.886637521, -1.790945037, -1.682031551, -1.557888021, -1.411345635, -1.321452336, -1.216161797, -1.084658649, -0.9052139984, -0.621747262, -0.2833363228, -0.04574068147, 0.4245213579, 0.5931272142}},
    {1, 0, 250, -2.183544602, 0.5728983139,
     {-4.800762328, -4.654685922, -4.418686163, -4.206457693, -4.000362978, -3.694116817, -3.429092814, -3.263837009, -3.13763505, -3.031837059, -2.946011072, -2.800370446, -2.673773986, -2.563956926, -2.458858096, -2.361240651, -2.268093514, -2.176460096, -2.089748183, -2.000136873, -1.908056715, -1.809316011, -1.702012023, -1.580937753, -1.433503238, -1.346004217, -1.241762489, -1.112878836, -0.934119788, -0.6546701511, -0.325165254, -0.1067473275, 0.3750072618, 0.6030242731}},
    {1, 0, 500, -2.184760991, 0.5718990034,
     {-4.773782973, -4.614418873, -4.381540542, -4.19019817, -3.979795794, -3.683383897, -3.42384173, -3.262309643, -3.137800559, -3.035804285, -2.947254887, -2.799158159, -2.676873354, -2.56552912, -2.461526532, -2.367566723, -2.276318835, -2.183583456, -2.095658912, -2.002620473, -1.908854647, -1.809827494, -1.70050595, -1.578415842, -1.431495142, -1.343896943, -1.239629178, -1.111695077, -0.9302595256, -0.660484138, -0.3193388725, -0.09351134137, 0.3953749334, 0.5518611509}},
    {1, 1, 8, -2.625828285, 39.28353573,
     {-64.86498398, -45.48613933, -30.99929737, -21.86157834, -15.81900545, -10.0698398, -7.162929823, -5.776222523, -4.964528939, -4.419097599, -4.022498966, -3.436033206, -3.034830384, -2.721601834, -2.47580317, -2.269489026, -2.092788929, -1.93021366, -1.765316221, -1.607598171, -1.449943476, -1.283945404, -1.102254174, -0.8975692119, -0.6582644596, -0.5219847199, -0.3637386008, -0.1603929863, 0.09148616415, 0.5285794413, 1.242361896, 1.908373476, 4.782313976, 6.799064061}},
    {1, 1, 10, -2.209103541, 2.360106593,
     {-15.50745251, -13.18100938, -10.3288883, -8.738578698, -7.190854657, -5.664998569, -4.685266272, -4.180815067, -3.84152892, -3.586113235, -3.379420648, -3.074668253, -2.840101139, -2.64420916, -2.472654424, -2.318807237, -2.180290948, -2.043352655, -1.910596567, -1.782594398, -1.648407345, -1.506442212, -1.347468615, -1.157062341, -0.9280267838, -0.7950834351, -0.647305877, -0.4606634992, -0.2221473723, 0.1609916529, 0.6607352502, 1.029157798, 1.92222371, 2.43596903}},
    {1, 1, 15, -2.168646954, 1.092330072,
     {-7.835011057, -6.981596266, -6.196479417, -5.631759885, -5.080987305, -4.414735085, -3.928841549, -3.636132044, -3.429362608, -3.26823268, -3.137987632, -2.925108812, -2.747414113, -2.597833041, -2.4666911, -2.348091745, -2.236766354, -2.12879255, -2.021105982, -1.911943284, -1.799863855, -1.67910338, -1.541638295, -1.377799431, -1.177610178, -1.0597163, -0.9217540042, -0.7509827332, -0.5324405108, -0.1828052691, 0.255558624, 0.5420379873, 1.226487706, 1.449667056}},
    {1, 1, 20, -2.164417353, 0.885915502,
     {-6.488035205, -6.051899094, -5.450275118, -5.051168776, -4.664203012, -4.138888731, -3.739769626, -3.498028889, -3.319977596, -3.179728104, -3.060136084, -2.868762355, -2.713771364, -2.577682238, -2.454907653, -2.345129129, -2.239326306, -2.137520765, -2.037798935, -1.937117567, -1.831339604, -1.718931536, -1.598322716, -1.455687755, -1.272647306, -1.161327414, -1.031407242, -0.8685519012, -0.6497177918, -0.3016721098, 0.1029500154, 0.4002360389, 1.004116777, 1.245534415}},
    {1, 1, 25, -2.165523659, 0.7953913652,
     {-5.981231969, -5.617665865, -5.171949981, -4.818160325, -4.454763683, -3.99961005, -3.640385637, -3.427675825, -3.269861469, -3.136869219, -3.027599593, -2.851826645, -2.702087723, -2.573967843, -2.455389105, -2.347632005, -2.246339311, -2.147207857, -2.049961513, -1.953454201, -1.850168024, -1.744542773, -1.623123018, -1.486029967, -1.309735512, -1.202006003, -1.081011568, -0.9223339547, -0.7121036361, -0.3790555233, 0.009910090647, 0.2878125221, 0.881554184, 1.125884381}},
    {1, 1, 50, -2.177084343, 0.6580684974,
     {-5.193748598, -4.964164112, -4.657469677, -4.419036727, -4.156774377, -3.80186404, -3.516894396, -3.328953374, -3.191667783, -3.076502023, -2.979465662, -2.821249759, -2.687359193, -2.568557959, -2.460791603, -2.36419691, -2.267555476, -2.172704633, -2.080737149, -1.985417174, -1.888589096, -1.785648377, -1.672471892, -1.542604376, -1.382379198, -1.285961903, -1.174631725, -1.028620911, -0.8390657673, -0.5307004313, -0.1637021457, 0.08697009384, 0.5990090955, 0.8149961691}},
    {1, 1, 100, -2.181776194, 0.6053574673,
     {-4.960091043, -4.780796602, -4.494708685, -4.274725853, -4.046492778, -3.719254432, -3.465626284, -3.291015508, -3.163399388, -3.055515442, -2.966132066, -2.812622892, -2.681861933, -2.565654885, -2.458881483, -2.360622872, -2.268999191, -2.175431617, -2.084719787, -1.99084717, -1.898803533, -1.799163312, -1.69209805, -1.568550924, -1.420698817, -1.326908844, -1.219188968, -1.081889989, -0.8978915162, -0.6033579856, -0.2527077446, -0.0007400513586, 0.5105400643, 0.6939811237}},
    {1, 1, 250, -2.17854803, 0.580146769,
     {-4.869939513, -4.702249127, -4.449965155, -4.23606379, -4.011949691, -3.695175831, -3.427304652, -3.261885666, -3.138533, -3.033999478, -2.945697682, -2.792993294, -2.668049932, -2.556826259, -2.454062552, -2.356487085, -2.265607849, -2.173155685, -2.085418386, -1.995635743, -1.902296598, -1.804354344, -1.698592186, -1.57634314, -1.428065237, -1.337326762, -1.233049261, -1.098119992, -0.9229482588, -0.6349029277, -0.2990111704, -0.04939109995, 0.4551499444, 0.6294856337}},
    {1, 1, 500, -2.184121248, 0.5691059534,
     {-4.739384087, -4.584888105, -4.364793954, -4.182287717, -3.981997651, -3.681285282, -3.423720406, -3.257128812, -3.132527184, -3.030931063, -2.945110684, -2.800251248, -2.675999071, -2.563840333, -2.461228677, -2.366562341, -2.27263392, -2.18353602, -2.0941927, -2.000704619, -1.907420887, -1.809393759, -1.701359942, -1.579355238, -1.433604472, -1.347330147, -1.242370332, -1.112790227, -0.9376056088, -0.6614392747, -0.3207811867, -0.09153482379, 0.3977197712, 0.5289798176}},
    {1, 2, 10, -2.134844481, 18.32821079,
     {-52.70973421, -41.20135794, -26.79567412, -18.79981789, -13.06655898, -8.406980783, -5.909884956, -4.877365109, -4.236302844, -3.799616391, -3.470503763, -2.982289515, -2.64486312, -2.386110663, -2.162442867, -1.969386149, -1.796692287, -1.634937137, -1.479283467, -1.32638783, -1.17060778, -0.9972633576, -0.8139781954, -0.6003723887, -0.3496931455, -0.2056962133, -0.03642562485, 0.1721647385, 0.4679592449, 1.00824627, 1.872032097, 2.776247186, 6.098715248, 9.006810764}},
    {1, 2, 15, -1.95110563, 1.283022028,
     {-8.006727468, -7.29922113, -6.401498453, -5.701677233, -5.057228028, -4.329517272, -3.806789815, -3.493699598, -3.284244415, -3.117486191, -2.979861714, -2.756529539, -2.581121507, -2.425362448, -2.289769897, -2.165172007, -2.046413895, -1.936068535, -1.820858378, -1.702840256, -1.579654453, -1.440662036, -1.282448549, -1.095539775, -0.8718124273, -0.7428355793, -0.5874040209, -0.3991121005, -0.1498510988, 0.2484556406, 0.7310450776, 1.102683651, 1.92764404, 2.385529534}},
    {1, 2, 20, -2.019980617, 0.959568731,
     {-6.236381555, -5.890373816, -5.335786776, -4.958301194, -4.527306822, -4.002539508, -3.605071311, -3.361495833, -3.190625796, -3.051873046, -2.937011059, -2.752599029, -2.599634266, -2.468098183, -2.349553939, -2.23685891, -2.132045833, -2.029918197, -1.93011488, -1.825099669, -1.713305476, -1.587870949, -1.445935236, -1.276632876, -1.072420277, -0.9472958629, -0.7985929969, -0.6204755427, -0.3851362524, -0.006112479757, 0.4504854615, 0.7625509774, 1.423628376, 1.646636774}},
    {1, 2, 25, -2.059176018, 0.8395756455,
     {-5.845017143, -5.451998832, -4.98980012, -4.670780668, -4.348276877, -3.892281357, -3.540988081, -3.327341558, -3.16734221, -3.03857989, -2.932127671, -2.759342169, -2.611913284, -2.488723277, -2.375013141, -2.270347456, -2.169415483, -2.070290038, -1.973912603, -1.873018295, -1.766061088, -1.651523593, -1.524544202, -1.364608685, -1.174243061, -1.055477265, -0.9171957434, -0.7402849277, -0.5153637302, -0.162018458, 0.2830451132, 0.5653337155, 1.248341001, 1.553627438}},
    {1, 2, 50, -2.12704463, 0.6748228583,
     {-5.179321005, -4.9507044, -4.623050632, -4.370959299, -4.10872472, -3.750404106, -3.458757975, -3.276870321, -3.139172152, -3.029503877, -2.93566593, -2.776515672, -2.64328193, -2.525863609, -2.418856169, -2.320370469, -2.226005124, -2.131053461, -2.040249473, -1.947855045, -1.849870533, -1.746990192, -1.632507923, -1.499275082, -1.330722178, -1.223843645, -1.102010016, -0.9512652144, -0.7469625543, -0.4145351277, -0.03420736533, 0.2270024125, 0.7943800697, 1.043345175}},
    {1, 2, 100, -2.159417848, 0.6178266901,
     {-4.934639328, -4.743620974, -4.477225772, -4.261162977, -4.032735802, -3.712287514, -3.444982909, -3.26989324, -3.143166663, -3.038043525, -2.945171769, -2.792036303, -2.659619276, -2.545943978, -2.441288728, -2.345125883, -2.251472877, -2.160086613, -2.069537554, -1.979365248, -1.885677153, -1.783138737, -1.67205721, -1.546604306, -1.391884485, -1.297491463, -1.184979899, -1.042169942, -0.8507856571, -0.540802322, -0.1752659919, 0.08229920629, 0.5688635259, 0.7930882505}},
    {1, 2, 250, -2.174880685, 0.5837775586,
     {-4.892503227, -4.66944082, -4.407286187, -4.219546677, -3.999937206, -3.683005659, -3.425812669, -3.261001463, -3.136440981, -3.030079104, -2.940272174, -2.793519359, -2.666743747, -2.552852908, -2.451086536, -2.354273386, -2.263292111, -2.173677773, -2.08611811, -1.99460798, -1.900999567, -1.802749976, -1.694219101, -1.570552157, -1.424587682, -1.333122523, -1.228255869, -1.093546535, -0.9104900998, -0.6261127607, -0.2574222998, -0.01828121755, 0.4969459762, 0.7091197297}},
    {1, 2, 500, -2.175055217, 0.5699186747,
     {-4.771553796, -4.578957697, -4.346352711, -4.167543703, -3.96380272, -3.66617363, -3.419129029, -3.250592297, -3.125562747, -3.023177283, -2.935524899, -2.788179656, -2.662666348, -2.55231635, -2.45085456, -2.355272442, -2.264714571, -2.175672046, -2.086623946, -1.994861818, -1.902181915, -1.804306697, -1.699189768, -1.577006179, -1.43104473, -1.340125507, -1.23472267, -1.10132422, -0.9205683932, -0.6341776199, -0.3041247705, -0.06128954798, 0.4129279496, 0.6207844617}},
}};

}  // namespace gravity::detail::adf_tables
