closedset geo3_r1
  provenance Theorem geo3, proof: A17^alpha -/-> A16, A30
  span 1 2 2
  span 2 1 2
  span 1 3 3
  span 3 1 3
  span 3 3 4
  eq c_2_2_3
  eq c_2_1_2 = c_1_2_2
  eq c_1_2_2*c_2_3_3 + c_1_1_1*c_3_2_3 = c_1_3_3*(c_2_3_3 + c_3_2_3)
  eq c_2_3_3 + c_3_2_3 = c_2_2_2
  eq c_2_1_3*c_3_2_3 = c_1_2_3*c_2_3_3
  eq c_1_2_2*c_2_1_3 = c_1_1_3*c_2_3_3
  sources A17
  targets A16 A30
end

closedset geo3_r2
  provenance Theorem geo3, proof: A19^alpha -/-> A16, A30
  span 1 2 2
  span 2 1 2
  span 1 3 3
  span 3 1 3
  span 2 3 4
  span 3 2 4
  eq c_3_1_3 + c_1_3_3 = c_1_1_1
  sources A19
  targets A16 A30
end

closedset geo3_r3
  provenance Theorem geo3, proof: A32 -/-> A12, A16, A17^alpha, A19^alpha, A30
  eq c_1_1_2
  eq c_1_1_3
  eq c_2_2_1
  eq c_2_2_3
  eq c_3_3_1
  eq c_3_3_2
  eq c_1_2_3 = -c_2_1_3
  eq c_2_1_1 + c_1_2_1 = c_2_2_2
  eq c_2_1_2 + c_1_2_2 = c_1_1_1
  eq c_2_3_3 + c_3_2_3 = c_2_2_2
  eq c_3_1_3 + c_1_3_3 = c_1_1_1
  sources A32
  targets A12 A16 A17 A19 A30
end
