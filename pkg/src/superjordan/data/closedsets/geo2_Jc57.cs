[closedset]
label = geo2_Jc57
source = Jc57
targets = Jc50 Jc58 Jc62 Jc65
basis = e1 e2 f1 f2
condition: c[1,2,1] = 0
condition: c[1,3,3] = 0
condition: c[1,1,1]-c[1,4,4] = 0
