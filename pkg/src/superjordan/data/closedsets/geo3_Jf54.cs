[closedset]
label = geo3_Jf54
source = Jf54
targets = Jf55
basis = e1 e2 e3 f
condition: c[3,4,4] = 0
condition: c[2,4,4] = 0
condition: c[1,1,1] = c[1,4,4]
