closedset geo1
  provenance Theorem geo1, proof: {A29, A30} -/-> A02^alpha
  eq c_1_2_3 = -c_2_1_3
  eq c_1_3_2
  eq c_3_1_2
  eq c_2_3_1
  eq c_3_2_1
  sources A29 A30
  targets A02
end
