[closedset]
label = geo2_Jc12
source = Jc12
targets = Jc8 Jc49
basis = e1 e2 f1 f2
condition: c[2,2,1] = 0
condition: c[3,4,1] = 0
condition: c[3,4,2] = 0
