// Generated by tests/oracle/gen_reference_values.py (mpmath, 60 digits).
// Do not edit by hand; regenerate with the script instead.
#pragma once

namespace oracle {

// log of the upper-tail normal probability, log(1 - Phi(x))
inline constexpr double log_phic_8_5 = -39.197396428217669289;
inline constexpr double log_phic_10 = -53.231285150512470578;
inline constexpr double log_phic_12 = -75.410673001568795939;
inline constexpr double log_phic_20 = -203.91715537109726394;
inline constexpr double log_phic_40 = -804.60844201375378817;

// upper-tail normal probabilities
inline constexpr double phic_1_5 = 0.066807201268858066004;
inline constexpr double phic_2 = 0.0227501319481792072;
inline constexpr double phic_5 = 2.8665157187919391167e-7;

// absolute moments of the standard Gaussian, m_p(gamma)
inline constexpr double gauss_moment_0_5 = 0.82217895866245855234;
inline constexpr double gauss_moment_1 = 0.79788456080286535588;
inline constexpr double gauss_moment_1_5 = 0.86003998732451953538;
inline constexpr double gauss_moment_2 = 1.0;
inline constexpr double gauss_moment_3 = 1.5957691216057307118;
inline constexpr double gauss_moment_4_5 = 4.3164395329779073998;

// incomplete Gaussian moments  M_p(a) = int_a^inf x^p dgamma
inline constexpr double incomplete_moment_p3_a1_5 = 0.55044978158003984236;
inline constexpr double incomplete_moment_p2_a0 = 0.5;
inline constexpr double incomplete_moment_p5_am2 = 2.159638660527522078;
inline constexpr double incomplete_moment_p6_am2 = 9.151669436432130593;
inline constexpr double incomplete_moment_p4_a1 = 1.4438486598709445534;
inline constexpr double incomplete_moment_p7_a3 = 6.5547038012563126127;
inline constexpr double incomplete_moment_p2_am8 = 0.99999999999995895974;

// heavy-tail family: normalizing constant, mass check, moments, entropy
inline constexpr double heavytail_C_1 = 0.70870928052036768915;
inline constexpr double heavytail_C_2 = 0.75848316126554633731;
inline constexpr double heavytail_C_5 = 0.87905506253486259811;
inline constexpr double heavytail_C_10 = 0.93717315882744449508;
inline constexpr double heavytail_C_20 = 0.96827467953414395604;
inline constexpr double heavytail_m2_2 = 1.1558662476918701283;
inline constexpr double heavytail_m2_5 = 2.7710580829896827027;
inline constexpr double heavytail_m2_10 = 5.8615684424092343264;
inline constexpr double heavytail_m2_20 = 12.182700589383764323;
inline constexpr double heavytail_H_5 = 0.43936556253556987131;
inline constexpr double heavytail_mass_5 = 1.0;  // == 1 by construction

// bump family scalar functionals (quintic value-space bridge)
inline constexpr double bump_norm_s1_t2_k10 = 1.005;
inline constexpr double bump_I_s1_t2_k10 = 1.9900497512437810945;
inline constexpr double bump_H_s1_t2_k10 = 0.96022905278195604088;
inline constexpr double bump_delta_s1_t2_k10 = 0.034795822839934506392;
inline constexpr double bump_m1_s1_t2_k10 = 0.89341747343568692127;
inline constexpr double bump_m2_s1_t2_k10 = 2.9900497512437810945;
inline constexpr double bump_m3_s1_t2_k10 = 41.687332459309184788;
inline constexpr double bump_l1_s1_t2_k10 = 0.0099502487562189054726;
inline constexpr double bump_norm_s1_t2_k20 = 1.00125;
inline constexpr double bump_I_s1_t2_k20 = 1.9975031210986267166;
inline constexpr double bump_H_s1_t2_k20 = 0.98829165587019495083;
inline constexpr double bump_delta_s1_t2_k20 = 0.010459904679118407474;
inline constexpr double bump_m1_s1_t2_k20 = 0.8468260282675309422;
inline constexpr double bump_m2_s1_t2_k20 = 2.9975031210986267166;
inline constexpr double bump_m3_s1_t2_k20 = 81.643714478507596216;
inline constexpr double bump_l1_s1_t2_k20 = 0.0024968789013732833958;
inline constexpr double bump_norm_s1_t2_k40 = 1.0003125;
inline constexpr double bump_I_s1_t2_k40 = 1.9993751952514839113;
inline constexpr double bump_H_s1_t2_k40 = 0.996637235394228596;
inline constexpr double bump_delta_s1_t2_k40 = 0.0030503622315133596416;
inline constexpr double bump_m1_s1_t2_k40 = 0.82262748971233025268;
inline constexpr double bump_m2_s1_t2_k40 = 2.9993751952514839113;
inline constexpr double bump_m3_s1_t2_k40 = 161.62026278948401696;
inline constexpr double bump_l1_s1_t2_k40 = 0.00062480474851608872227;
inline constexpr double bump_norm_s1_t2_k80 = 1.000078125;
inline constexpr double bump_I_s1_t2_k80 = 1.9998437622060776502;
inline constexpr double bump_H_s1_t2_k80 = 0.99905082519397309265;
inline constexpr double bump_delta_s1_t2_k80 = 0.00087105590906573244073;
inline constexpr double bump_m1_s1_t2_k80 = 0.81032125445486106986;
inline constexpr double bump_m2_s1_t2_k80 = 2.9998437622060776502;
inline constexpr double bump_m3_s1_t2_k80 = 321.60814348539593415;
inline constexpr double bump_l1_s1_t2_k80 = 0.00015623779392234981642;
inline constexpr double bump_norm_s1_t0_5_k10 = 1.1581138830084189666;
inline constexpr double bump_I_s1_t0_5_k10 = 54.610823798325729887;
inline constexpr double bump_H_s1_t0_5_k10 = 26.81216990156870174;
inline constexpr double bump_delta_s1_t0_5_k10 = 0.49324199759416320322;
inline constexpr double bump_m1_s1_t0_5_k10 = 3.4194929178156273697;
inline constexpr double bump_m2_s1_t0_5_k10 = 55.610823798325729887;
inline constexpr double bump_m3_s1_t0_5_k10 = 1101.786002992062139;
inline constexpr double bump_l1_s1_t0_5_k10 = 0.27305411899162864944;
inline constexpr double bump_norm_s1_t0_5_k40 = 1.0790569415042094833;
inline constexpr double bump_I_s1_t0_5_k40 = 468.89501949880824465;
inline constexpr double bump_H_s1_t0_5_k40 = 234.13472305403101064;
inline constexpr double bump_delta_s1_t0_5_k40 = 0.31278669537311168057;
inline constexpr double bump_m1_s1_t0_5_k40 = 6.6006154144293031634;
inline constexpr double bump_m2_s1_t0_5_k40 = 469.89501949880824465;
inline constexpr double bump_m3_s1_t0_5_k40 = 37530.663978477253281;
inline constexpr double bump_l1_s1_t0_5_k40 = 0.14652969359337757645;
inline constexpr double bump_norm_s2_t1_k5 = 1.1999992143799659678;
inline constexpr double bump_I_s2_t1_k5 = 16.66675367973368786;
inline constexpr double bump_H_s2_t1_k5 = 7.7672535892169274142;
inline constexpr double bump_delta_s2_t1_k5 = 0.56612325064991651591;
inline constexpr double bump_m1_s2_t1_k5 = 2.3315686441021022216;
inline constexpr double bump_m2_s2_t1_k5 = 17.666661067458058071;
inline constexpr double bump_m3_s2_t1_k5 = 172.99649942150918026;
inline constexpr double bump_l1_s2_t1_k5 = 0.33333290835331335942;

// fractional moment spot value
inline constexpr double bump_m2_5_s1_t2_k10 = 10.168616976421713181;

// 1-D Wasserstein distances to gamma, W_p(mu_k, gamma)
inline constexpr double bump_W1_s1_t2_k5 = 0.18043058214422773531;
inline constexpr double bump_W2_s1_t2_k5 = 1.0349143498321653327;
inline constexpr double bump_W3_s1_t2_k5 = 1.9950427803439758717;
inline constexpr double bump_W1_s1_t2_k10 = 0.095532912632821565393;
inline constexpr double bump_W2_s1_t2_k10 = 1.1934644576438285858;
inline constexpr double bump_W3_s1_t2_k10 = 2.8897478372567971331;
inline constexpr double bump_W1_s1_t0_5_k5 = 1.6816296601851729117;
inline constexpr double bump_W2_s1_t0_5_k5 = 3.5306238204142323638;
inline constexpr double bump_W3_s1_t0_5_k5 = 4.6832390019840347724;

// Shannon entropies of normalized Gaussians
inline constexpr double shannon_Gpi_sq = 0.15342640972002734529;  // S(|G_a|^2)
inline constexpr double shannon_G2pi_sq = -0.19314718055994530942;  // S(|G_a|^2)

// weighted L^p norms of Gaussian optimizers (direct quadrature)
inline constexpr double lpdm_Ga_a1_0pi_p4_0_th1_0 = 0.99266558930404949056;
inline constexpr double lpdm_Ga_a2_0pi_p4_0_th1_0 = 1.061850480972383657;
inline constexpr double lpdm_Ga_a1_0pi_p2_5_th0_5 = 1.0;
inline constexpr double lpdm_Ga_a4_0pi_p6_0_th2_0 = 1.2269252577694807814;

// weighted norms of the transformed bump h_k (s=1, t=1/2)
inline constexpr double hk_L4_dm1_k4 = 77.323771533355042314;
inline constexpr double hk_L4_dm1_k6 = 55935.923006193837042;
inline constexpr double hk_minus_Gpi_L4_dm1_k4 = 77.323771064498742843;

}  // namespace oracle
