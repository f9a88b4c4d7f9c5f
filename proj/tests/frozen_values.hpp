// Reference values from tests/oracles/freeze.py (mpmath), frozen.
#pragma once

namespace frozen {

constexpr const char* kT_1_2 = "2.10359958052928999944954178264503748383872601";
constexpr const char* kS_1_2 = "0.786654929130021726475343988313026932027562499";
constexpr const char* kS_2_3 = "0.0567039920292633303550245490333719253396120441";
constexpr const char* kM_m1_m3 = "0.237764415447604305106223715568485720033518515";
constexpr const char* kM_2_m2 = "0.283497484167675071176622948957224742936668994";
constexpr const char* kM_1_2 = "0.601028451579797142699869080755724995382493146";
constexpr const char* kpsi_2_2 = "3.04403409481257616363876039652203472655398705";
constexpr const char* kpsi_1_3 = "6.08806818962515232727752079304406945310797410";
constexpr const char* kpsi_3_2 = "2.84576618283071461880073323614356017572672953";
constexpr const char* kpsi_2_4 = "4.20875830160379398414608931889926215529771135";
constexpr const char* klogint_t2_log3 = "-9.15134815395834533153707145619976251689895995";
constexpr const char* klogint_t3_log4 = "39.9397205647893878002694298196056248675676732";

}  // namespace frozen
