#pragma once

// Reference values computed with an independent straight-line transcription
// of the definitions (IEEE double, natural summation order). Frozen so the
// library can be checked against an implementation-independent path.

#include <array>

namespace frozen {

inline constexpr double table2_deng = 1.3844315043405979;
inline constexpr double table2_dp = 0;
inline constexpr double table2_mean_inu = 2.3601740602896935;
inline constexpr std::array<std::array<double, 4>, 6> table2_iu = {{
    {1.3456651332349492, 0.23815990731052833, 0, 0},
    {1.1480028648407017, 1.2734449482875945, 0, 0},
    {0.81705652098448422, 0.40234230387346659, 0, 0},
    {0.70378635689958635, 1.2170528340806179, 0, 0},
    {3.1927925643396122, 0.36075897530248541, 0, 0},
    {3.262108294441628, 0.19987365814250749, 0, 0},
}};
inline constexpr std::array<double, 6> table2_inu = {1.5838250405454775, 2.4214478131282959, 1.2193988248579508, 1.9208391909802043, 3.5535515396420978, 3.4619819525841353};

inline constexpr double table3_deng = 1.3250112108241772;
inline constexpr double table3_dp = 0;
inline constexpr double table3_mean_inu = 2.5775810512681052;
inline constexpr std::array<std::array<double, 4>, 6> table3_iu = {{
    {2.8174023842565643, 0.87691050772735668, 0, 0},
    {3.0993101858493466, 0.09098257233007491, 0, 0},
    {2.2783554591519426, 1.152467306947663, 0, 0},
    {2.5932695531556713, 0.097014870582143531, 0, 0},
    {0.343114560584523, 0.9796912814115768, 0, 0},
    {0.35897926768557165, 0.77798835792619703, 0, 0},
}};
inline constexpr std::array<double, 6> table3_inu = {3.694312891983921, 3.1902927581794214, 3.4308227660996056, 2.6902844237378147, 1.3228058419960997, 1.1369676256117687};

inline constexpr double table4_deng = 1.9481654507657751;
inline constexpr double table4_dp = 0.076923076923076927;
inline constexpr double table4_mean_inu = 4.1303465978215401;
inline constexpr std::array<std::array<double, 4>, 24> table4_iu = {{
    {3.0632646232446801, 1.1694404215891929, 0.96887055527794785, 0},
    {3.283297794491796, 1.2077636931596665, 0.065492847324337605, 0},
    {2.9224953512237399, 2.1779537318630466, 0.47858155114989998, 0},
    {2.9787791268725221, 2.1963170746086753, 0.059921167359188433, 0},
    {3.4086157895016318, 0.21305020753428791, 0.27313064973006085, 0},
    {3.2391154974696446, 0.20173110283776424, 0.56260162665756219, 0},
    {2.1720777679979428, 1.7218166179916949, 0.99655257114303231, 0},
    {2.3137149601884719, 1.8053555972781918, 0.067605519818671078, 0},
    {2.1179041787238888, 2.2457955646676622, 0.73007734306084393, 0},
    {2.1936936817352124, 2.3156725974440739, 0.064212548312604145, 0},
    {2.4691444631641062, 0.22670935570693659, 0.41795931378535889, 0},
    {2.3993429015821506, 0.21973558914333458, 0.56971317106071018, 0},
    {3.8036697778021713, 1.602386646489494, 0.46631022932554361, 0},
    {3.8947130059915729, 1.6008158698931294, 0.058301676349480643, 0},
    {3.8885729147220234, 1.1221789856787567, 0.69165221974185209, 0},
    {4.0737103644182824, 1.1286548191695862, 0.06054325983759818, 0},
    {4.1261443207917701, 0.19064382089186596, 0.39614299907172973, 0},
    {4.2224769398399919, 0.19522639305776079, 0.26171416281558924, 0},
    {0.47588528655642032, 1.4152282294598573, 0.30347849970006763, 0},
    {0.44681132925334199, 1.353304423533001, 0.62080179493248255, 0},
    {0.49325490525725735, 0.98808176753963028, 0.45011003023038654, 0},
    {0.47653687611360063, 0.96302445063980624, 0.61191414669483712, 0},
    {0.43241580818160008, 1.7840932710389614, 0.44896206561462715, 0},
    {0.4450247087069984, 1.8202131256438228, 0.2978126680315325, 0},
}};
inline constexpr std::array<double, 24> table4_inu = {5.2015756001118207, 4.5565543349758002, 5.5790306342366867, 5.2350173688403867, 3.8947966467659807, 4.0034482269649709, 4.8904469571326707, 4.1866760772853349, 5.0937770864523957, 4.5735788274918896, 3.1138131326564014, 3.1887916617861953, 5.8723666536172088, 5.5538305522341824, 5.7024041201426323, 5.2629084434254674, 4.7129311407553658, 4.6794174957133414, 2.1945920157163452, 2.4209175477188256, 1.9314467030272744, 2.0514754734482441, 2.6654711448351884, 2.563050502382354};

inline constexpr double table5_deng = 2.2011968439749232;
inline constexpr double table5_dp = 0.41176470588235292;
inline constexpr double table5_mean_inu = 2.1507906792854707;
inline constexpr std::array<std::array<double, 4>, 6> table5_iu = {{
    {2.1534580797290399, 0.44022794796350401, 0, 0},
    {1.9299780588154025, 0.52776489358593459, 0, 0},
    {1.3065263964206815, 0.79816703351040164, 0, 0},
    {1.2064530800553559, 0.547590972025497, 0, 0},
    {1.5275602894133753, 0.56551406939308502, 0, 0},
    {1.5817054017725356, 0.31979785302801195, 0, 0},
}};
inline constexpr std::array<double, 6> table5_inu = {2.5936860276925437, 2.457742952401337, 2.1046934299310829, 1.7540440520808529, 2.0930743588064602, 1.9015032548005475};

inline constexpr double case5_mean_inu = 2.2848357606820477;
// lexicographic by position tuple (1,2,3),(1,3,2),(2,1,3),(2,3,1),(3,1,2),(3,2,1)
inline constexpr std::array<double, 6> case5_inu_lex = {1.6624397127931105, 1.3267225453639049, 2.9388944990307007, 2.019032358965545, 3.1569534255592964, 2.6049720223797292};
inline constexpr double case5_deng = 1.4591479170272446;

inline constexpr std::array<double, 3> example1_values = {0.50000000000000011, 0.33333333333333337, 0.16666666666666669};
inline constexpr std::array<double, 3> example1_iu = {1.5915481380572103, 0.51714823797735032, 0};
inline constexpr double example1_inu = 2.1086963760345605;

}  // namespace frozen
