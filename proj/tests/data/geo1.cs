closedset geo1
  eq c_1_2_3 = -c_2_1_3
  eq c_1_3_2
  eq c_3_1_2
  eq c_2_3_1
  eq c_3_2_1
end
