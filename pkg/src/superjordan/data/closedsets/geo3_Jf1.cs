[closedset]
label = geo3_Jf1
source = Jf1
targets = Jf2 Jf3 Jf4
basis = e1 e2 e3 f
condition: A1*A4 = 0
